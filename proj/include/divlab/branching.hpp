#pragma once

// Numeric certificates for the weighted basis-expansion inequalities on
// saturated intersecting families. Given the basis B of a saturated family
// with covering number t, a selected ell-set U and the smallest r with
// tau(B restricted to sizes <= r) >= ell+1, the certificate checks
//
//     sum_{r <= j <= k}  |B^(j)(U-bar)| / k^(j-ell-1)  <=  (t-1) r (r-1)^(ell-1)
//
// in exact rational arithmetic, plus the t=4 pair variant with constant
// bound 24. A debug simulation of the underlying weighted sequence process
// is available for inspection.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "divlab/counting.hpp"
#include "divlab/family.hpp"

namespace divlab {

struct SelectedU {
    Mask u = 0;
    char u_case = '1';  // '1': r > t, U transversal of B^(<= r-1); '2': r == t
    int r = 0;
    int t = 0;
};

// Chooses U per the selection rule: for r > t, an ell-set transversal of
// B^(<= r-1) minimizing |B^(r)(U-bar)|; for r == t, an ell-set minimizing
// |B^(t)(U-bar)|. Ties broken by lexicographic order of the vertex tuple.
// Throws on non-saturated or non-intersecting input and on tau < ell+1.
SelectedU select_u(const Family& fam, int ell);

struct BranchingCertificate {
    std::string rule;  // "general" or "t4-pair"
    int ell = 0;
    int t = 0;
    int r = 0;
    char u_case = '1';
    Mask u = 0;
    std::map<int, std::uint64_t> per_level;  // j -> |B^(j)(U-bar)|
    BigRat weighted_sum;
    BigInt bound;
    bool holds = false;
    bool applicable = true;
    std::string note;
};

// Full certificate for one family and level; also re-derives the basis and
// confirms its up-closure reproduces the family before certifying.
BranchingCertificate verify_branching(const Family& fam, int ell);

struct Branching33Report {
    bool applicable = false;
    bool holds = false;
    std::string note;
    std::vector<BranchingCertificate> certs;  // one per (B1, pair V inside B1)
};

// t = 4 variant: requires tau(fam) = 4 and tau(B^(4)) >= 3; certifies the
// bound 24 for every pair V inside every B1 in B^(4).
Branching33Report verify_branching_33(const Family& fam);

struct BranchTrace {
    bool ran = false;
    std::string note;
    SelectedU sel;
    std::map<int, std::uint64_t> survivors_per_length;
    BigRat total_weight;
    bool weight_at_most_one = false;
    bool covers_basis_restriction = false;  // every B in B^(j)(U-bar) appears as a surviving sequence set
    bool per_sequence_weight_ok = false;
};

// Replays the weighted sequence process stage by stage (deterministic
// lexicographic choices). Expensive and for inspection only.
BranchTrace simulate_branching(const Family& fam, int ell, std::uint64_t max_sequences = 200000);

} // namespace divlab
