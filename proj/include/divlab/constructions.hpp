#pragma once

// Builders for the named families the workbench certifies: the two
// 3-uniform extremal families, the order-3 projective plane, the 4-uniform
// triple-diversity witnesses, wreath products and the derived lower-bound
// families. All builders return exact, validated families.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "divlab/family.hpp"

namespace divlab {

// Symbolic family {F in C([n],k) : F contains some generator}. The ground
// set may exceed 64 vertices; only the generators' support is explicit.
struct GeneratedFamily {
    long n = 0;
    int k = 0;
    int support_size = 0;          // generators live on vertices 0..support_size-1
    std::vector<Mask> generators;  // sorted, duplicate-free
};

// Wraps a concrete family as a generator list.
GeneratedFamily generated(const Family& gen, long n, int k);
GeneratedFamily generated(std::vector<Mask> generators, int support_size, long n, int k);

// Expands to an explicit Family; requires n <= 64 and C(n,k) <= budget.
Family enumerate_generated(const GeneratedFamily& gf, std::uint64_t budget = 2'000'000);

// The seven lines of the projective plane of order 2, on [7].
Family fano();

// The ten-triple intersecting family on [6] whose complement in C([6],3) is
// an isomorphic copy of itself.
Family t0();

// The thirteen lines of the projective plane of order 3, as cyclic
// translates of {0,1,3,9} modulo 13, on [13].
Family l3();

// Complete k-uniform family C([n],k).
Family complete_kgraph(int n, int k);

// C([3],2).
Family triangle();

// Wreath product: one copy of a's ground set per vertex of b; an edge picks
// one a-edge in each copy touched by a b-edge and takes the union. Errors
// out when the combined ground set would exceed 64 vertices (use the
// counting formulas at that scale).
Family wreath(const Family& a, const Family& b);

// 4-uniform triple-diversity witnesses (each intersecting, covering number
// 4, triple diversity 3):

// four disjoint pairs A,B,C,D glued to pairs of a 3-set E, plus the eight
// odd-parity transversal quadruples of A,B,C,D; 11 vertices, 20 edges.
Family parity_quads();

// all unions of pairs from two of three disjoint 3-sets; 9 vertices, 27 edges.
Family grid_quads();

// pentagon edges and pentagon chords over a 5-set Y, combined with a 3-set X
// and a 2-set Z; 10 vertices, 28 edges.
Family pentagon_quads();

// 5-uniform lower-bound family: cyclic product of pentagon edges with
// pentagon-complement triples across three 5-point copies; 15 vertices, 75
// edges.
Family pentagon_cycle_product();

// 6-uniform lower-bound family t0() wreath triangle(); 18 vertices, 300 edges.
Family t0_triangle();

// 2k-uniform family C([2k-1],k) wreath triangle(); requires k <= 10.
Family ekr_triangle(int k);

} // namespace divlab
