#pragma once

// Serial reference implementations. These enumerate candidate sets over the
// whole ground set with no orbit reduction and no parallelism; they exist as
// independent oracles for the production kernels (tests assert equality on
// every input where full enumeration is feasible) and as the baseline side
// of the benchmark.

#include <cstdint>
#include <vector>

#include "divlab/family.hpp"

namespace divlab::ref {

// min over all S in C([n],ell) of |fam(S-bar)|, plain scan.
std::uint64_t diversity_full(const Family& fam, int ell);

// max over all S in C([n],ell) of |fam(S)|, plain scan.
std::uint64_t max_degree_full(const Family& fam, int ell);

// Covering number by increasing-size subset enumeration over the support.
int covering_number_bruteforce(const Family& fam);

// All minimal transversals of size <= k by full subset enumeration.
std::vector<Mask> minimal_transversals_bruteforce(const Family& fam);

// Saturation check by a plain serial scan of all k-subsets.
bool is_saturated_serial(const Family& fam);

// Isomorphism by trying all support bijections; feasible for supports <= 9.
bool isomorphic_bruteforce(const Family& a, const Family& b);

} // namespace divlab::ref
