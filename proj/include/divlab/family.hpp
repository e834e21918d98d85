#pragma once

// Exact representation of uniform set families on a ground set [n], n <= 64,
// and the standard functionals: link, restriction, degree, diversity,
// covering number, matching number, basis, saturation.
//
// All operations are pure; Family values are immutable after construction and
// safe to share across threads.

#include <cstdint>
#include <string>
#include <vector>

#include "divlab/bits.hpp"

namespace divlab {

// Restriction query: keep edges disjoint from `avoid` and containing `require`.
struct SubsetQuery {
    Mask avoid = 0;
    Mask require = 0;
};

struct Family {
    int n = 0;                // ground set size, <= 64
    int k = 0;                // uniformity
    std::vector<Mask> edges;  // strictly increasing masks, each of popcount k

    std::uint64_t size() const { return edges.size(); }
    bool contains(Mask e) const;

    // Sorts, deduplicates and validates. Throws std::invalid_argument with a
    // message naming the offending edge on a violation.
    static Family make(int n, int k, std::vector<Mask> edges);
};

Mask support(const Family& fam);

// Edges disjoint from q.avoid and containing q.require; ground set unchanged.
Family restrict_family(const Family& fam, SubsetQuery q);

// { F \ s : s subset of F in fam }; uniformity drops to k - |s|.
Family link(const Family& fam, Mask s);

// |fam(S)| for a fixed S.
std::uint64_t degree(const Family& fam, Mask s);

// max over |S| = ell of |fam(S)|; candidates are taken from the edges'
// ell-subsets, never from all of C([n],ell).
std::uint64_t max_degree(const Family& fam, int ell);

// min over |S| = ell of |fam(S-bar)|. Candidate sets are enumerated as
// (subset of the support) x (count of interchangeable outside vertices);
// the scan over candidates is OpenMP-parallel. Requires 0 <= ell < n.
std::uint64_t diversity(const Family& fam, int ell);

struct CoverResult {
    int size = 0;
    Mask witness = 0;
};

// Minimum hitting set of a list of masks, by branch and bound on the first
// uncovered set, trying vertices in ascending order. Deterministic witness.
CoverResult min_hitting_set(const std::vector<Mask>& sets);

// Covering number tau with one witness transversal. Empty family -> 0.
CoverResult covering_number(const Family& fam);

// Maximum number of pairwise disjoint edges, exact branch and bound.
int matching_number(const Family& fam);

bool is_intersecting(const Family& fam);
bool is_intersecting(const std::vector<Mask>& edges);

// Containment-minimal transversals of size <= k, sorted by mask.
std::vector<Mask> basis(const Family& fam);

// True iff every k-set of [n] outside the family meets every edge... i.e.
// no k-set can be added while keeping the family intersecting. The k-subset
// scan is OpenMP-parallel. Throws if C(n,k) exceeds `budget`.
bool is_saturated(const Family& fam, std::uint64_t budget = 80'000'000);

// Greedy completion to a saturated intersecting superfamily: candidate
// k-sets are tried in increasing mask order. Deterministic.
Family saturate(const Family& fam);

struct FamilyStats {
    std::uint64_t size = 0;
    std::vector<std::uint64_t> delta;  // delta[l] for l = 0..k
    std::vector<std::uint64_t> gamma;  // gamma[l] for l = 0..k-1
    int tau = 0;
    Mask tau_witness = 0;
    int nu = 0;
    bool intersecting = false;
    bool saturated = false;
    std::vector<Mask> basis_sets;
};

// Bundles the functionals above. `with_saturation` controls the (possibly
// expensive) saturation scan.
FamilyStats analyze(const Family& fam, bool with_saturation = true);

} // namespace divlab
