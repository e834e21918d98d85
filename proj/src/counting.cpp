#include "divlab/counting.hpp"

#include <omp.h>
#include <stdexcept>

namespace divlab {

BigInt binom(long m, long r) {
    if (r < 0 || m < 0 || r > m) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(r));
    return out;
}

namespace {

struct SubsetTables {
    std::vector<Mask> uni;     // union of the generator subset
    std::vector<int> usize;    // |union|
    std::vector<int> sign;     // +1 for odd subsets, -1 for even
};

SubsetTables subset_tables(const GeneratedFamily& gf) {
    const std::size_t r = gf.generators.size();
    if (r > 22) throw std::invalid_argument("generated family has too many generators for inclusion-exclusion");
    const std::size_t total = std::size_t{1} << r;
    SubsetTables t;
    t.uni.resize(total);
    t.usize.resize(total);
    t.sign.resize(total);
    t.uni[0] = 0;
    t.usize[0] = 0;
    t.sign[0] = -1;
    for (std::size_t s = 1; s < total; ++s) {
        const std::size_t low = s & (~s + 1);
        const std::size_t rest = s & (s - 1);
        t.uni[s] = t.uni[rest] | gf.generators[static_cast<size_t>(std::countr_zero(low))];
        t.usize[s] = popcount(t.uni[s]);
        t.sign[s] = -t.sign[rest];
    }
    return t;
}

BigInt avoiding_count(const GeneratedFamily& gf, const SubsetTables& t, Mask avoid, long avoid_total) {
    // binomials only depend on |union|, so evaluate the k+1 possible values once
    std::vector<BigInt> by_usize(static_cast<size_t>(gf.k) + 1);
    for (int u = 0; u <= gf.k; ++u) by_usize[static_cast<size_t>(u)] = binom(gf.n - avoid_total - u, gf.k - u);
    BigInt acc = 0;
    const std::size_t total = t.uni.size();
    for (std::size_t s = 1; s < total; ++s) {
        if (t.uni[s] & avoid) continue;
        if (t.usize[s] > gf.k) continue;
        if (t.sign[s] > 0)
            acc += by_usize[static_cast<size_t>(t.usize[s])];
        else
            acc -= by_usize[static_cast<size_t>(t.usize[s])];
    }
    return acc;
}

} // namespace

BigInt count_generated_avoiding(const GeneratedFamily& gf, Mask avoid_support, long avoid_outside) {
    // bits beyond the generator support behave like outside vertices
    const Mask inside = avoid_support & full_mask(gf.support_size);
    const long avoid_total = popcount(inside) + popcount(avoid_support & ~full_mask(gf.support_size)) + avoid_outside;
    if (avoid_total > gf.n) throw std::invalid_argument("avoided set larger than the ground set");
    const SubsetTables t = subset_tables(gf);
    return avoiding_count(gf, t, inside, avoid_total);
}

BigInt generated_size(const GeneratedFamily& gf) { return count_generated_avoiding(gf, 0, 0); }

BigInt generated_diversity(const GeneratedFamily& gf, int ell) {
    if (ell < 0 || ell >= gf.n) throw std::invalid_argument("generated_diversity: need 0 <= ell < n");
    const SubsetTables t = subset_tables(gf);
    const int ss = gf.support_size;
    const long outside = gf.n - ss;

    std::vector<Mask> candidates;
    for (int j = static_cast<int>(std::max<long>(0, ell - outside)); j <= std::min(ell, ss); ++j) {
        for (Combinations c(ss, j); !c.done(); c.next()) {
            Mask m = 0;
            for (int i : c.indices()) m |= Mask{1} << i;
            candidates.push_back(m);
        }
    }

    std::vector<BigInt> vals(candidates.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::size_t i = 0; i < candidates.size(); ++i)
        vals[i] = avoiding_count(gf, t, candidates[i], ell);
    BigInt best = vals.at(0);
    for (const BigInt& v : vals)
        if (v < best) best = v;
    return best;
}

namespace {

BigInt ipow(long base, long exp) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return out;
}

} // namespace

ThmBounds theorem_bounds(const BoundSpec& spec) {
    const long l = spec.ell, k = spec.k, n = spec.n;
    if (l < 1 || k <= l) throw std::invalid_argument("theorem_bounds: need 1 <= ell < k");
    ThmBounds out;
    const BigInt tail = (l + 1) * ipow(l, l) * k * binom(n - 2 * l - 2, k - l - 2);
    out.main = spec.m_value * binom(n - 2 * l - 1, k - l - 1) + tail;
    out.reduced = (spec.m_value - 1) * binom(n - 2 * l - 1, k - l - 1) + tail;
    out.case1 = (l + 2) * ipow(l + 1, l) * k * binom(n - 2 * l - 2, k - l - 2);
    out.hypothesis_met =
        spec.m_value > 0 && BigInt(n) * spec.m_value >= ((l + 2) * ipow(l + 1, l) - (l + 1) * ipow(l, l)) * k * k;
    return out;
}

BigInt triple_diversity_bound(long n, int k) { return 3 * binom(n - 7, k - 4) + 108 * k * binom(n - 8, k - 5); }

BigInt top_diversity_bound(int ell) {
    if (ell < 4) throw std::invalid_argument("top_diversity_bound: need ell >= 4");
    return 2 * ipow(ell, ell - 3);
}

BigInt diversity_bound(long n, int k) { return binom(n - 3, k - 2); }

bool check_key3(long p, long q, long k) {
    if (!(k <= p && p <= q)) throw std::invalid_argument("check_key3: need k <= p <= q");
    return binom(p, k) * binom(q, k) > binom(p - 1, k) * binom(q + 1, k);
}

std::optional<bool> check_key4(long k) {
    if ((4 * k + 1) % 3 != 0) return std::nullopt;
    return binom((4 * k + 1) / 3, k) * binom((4 * k - 5) / 3, k) > binom(2 * k - 1, k);
}

MinF min_f_abc(int k) {
    if (k < 1) throw std::invalid_argument("min_f_abc: need k >= 1");
    MinF out;
    bool first = true;
    for (int a = 0; a <= 2 * k - 1; ++a) {
        for (int b = a; b <= 2 * k - 1; ++b) {
            const int c = 4 * k - 2 - a - b;
            if (c < b || c > 2 * k - 1) continue;
            const BigInt ca = binom(a, k), cb = binom(b, k), cc = binom(c, k);
            BigInt f = ca * cb + ca * cc + cb * cc;
            if (first || f < out.min) {
                out = MinF{std::move(f), a, b, c};
                first = false;
            }
        }
    }
    if (first) throw std::logic_error("min_f_abc: empty domain");
    return out;
}

bool certify_min_f_lower(int k) {
    if (k < 6) throw std::invalid_argument("certify_min_f_lower: intended for k >= 6");
    const BigInt bound = 2 * binom(2 * k - 2, k) + 1;

    // spreading a pair (b,c) with fixed sum toward the extremes only lowers
    // C(b,k)C(c,k); verified for every step instance used below
    for (long p = k; p <= 2 * k; ++p)
        for (long q = p; q <= 2 * k; ++q)
            if (!check_key3(p, q, k)) return false;

    // a <= k-1: f collapses to C(b,k)C(c,k) with b >= 2k-1-a >= k, and
    // spreading to (2k-1-a, 2k-1) bounds it below by C(2k-1,k)
    if (binom(2 * k - 1, k) < bound) return false;

    // a = b = x: f = C(x,k)^2 + 2 C(x,k) C(4k-2-2x,k), finitely many x
    for (int x = k; 3 * x <= 4 * k - 2; ++x) {
        const BigInt cx = binom(x, k);
        if (cx * cx + 2 * cx * binom(4 * k - 2 - 2 * x, k) < bound) return false;
    }

    // k <= a < b: f >= C(b,k)C(c,k) >= C(a+1,k)C(4k-3-2a,k) after spreading
    for (int a = k; 3 * a <= 4 * k - 4; ++a) {
        if (binom(a + 1, k) * binom(4 * k - 3 - 2 * a, k) < bound) return false;
    }
    return true;
}

} // namespace divlab
