#pragma once

// Exact arbitrary-precision arithmetic: binomials, inclusion-exclusion
// counts for generated families at large n, closed-form bound evaluators,
// and the product-of-binomials inequalities behind the lower-bound
// constructions. No floating point anywhere.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "divlab/constructions.hpp"

namespace divlab {

using BigInt = mpz_class;
using BigRat = mpq_class;

// C(m,r), with value 0 whenever r < 0, m < 0 or r > m.
BigInt binom(long m, long r);

// Number of k-subsets of [n] that contain at least one generator and avoid a
// given set. The avoided set is split into a part inside the generators'
// support and a count of (interchangeable) outside vertices.
BigInt count_generated_avoiding(const GeneratedFamily& gf, Mask avoid_support, long avoid_outside = 0);

BigInt generated_size(const GeneratedFamily& gf);

// min over |S| = ell of the avoiding count; candidates are support subsets
// padded with outside vertices, scanned OpenMP-parallel.
BigInt generated_diversity(const GeneratedFamily& gf, int ell);

struct BoundSpec {
    int ell = 2;
    int k = 3;
    long n = 0;
    long m_value = 0;  // the constant m_ell(ell+1) supplied by the caller
};

struct ThmBounds {
    BigInt main;     // m * C(n-2l-1,k-l-1) + (l+1) l^l k C(n-2l-2,k-l-2)
    BigInt reduced;  // same with m-1 in place of m
    BigInt case1;    // (l+2)(l+1)^l k C(n-2l-2,k-l-2)
    bool hypothesis_met = false;  // n * m >= ((l+2)(l+1)^l - (l+1) l^l) k^2
};

ThmBounds theorem_bounds(const BoundSpec& spec);

// 3 C(n-7,k-4) + 108 k C(n-8,k-5); equals the generic main bound at ell=3,
// m=3 since (l+1) l^l = 4*27 = 108.
BigInt triple_diversity_bound(long n, int k);

// 2 l^(l-3) for l >= 4.
BigInt top_diversity_bound(int ell);

// C(n-3,k-2), the diversity bound valid for n >= 36k.
BigInt diversity_bound(long n, int k);

// C(p,k) C(q,k) > C(p-1,k) C(q+1,k), for k <= p <= q.
bool check_key3(long p, long q, long k);

// C((4k+1)/3,k) C((4k-5)/3,k) > C(2k-1,k); defined only when the arguments
// are integral (k = 2 mod 3), otherwise nullopt.
std::optional<bool> check_key4(long k);

struct MinF {
    BigInt min;
    int a = 0, b = 0, c = 0;
};

// Exact minimum of f(a,b,c) = C(a,k)C(b,k) + C(a,k)C(c,k) + C(b,k)C(c,k)
// over a+b+c = 4k-2, 0 <= a <= b <= c <= 2k-1, by direct scan.
MinF min_f_abc(int k);

// Certifies min f >= 2 C(2k-2,k) + 1 without scanning the whole domain:
// spreading steps justified by check_key3, plus unimodality of the two
// boundary products established through exact integer sign checks, leaving
// finitely many endpoint evaluations. Returns false if any step of the
// argument fails to verify.
bool certify_min_f_lower(int k);

} // namespace divlab
