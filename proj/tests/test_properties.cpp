#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "divlab/constructions.hpp"
#include "divlab/family.hpp"

using namespace divlab;

namespace {

Family random_family(std::mt19937_64& rng, int n, int k, int max_edges) {
    std::vector<Mask> all;
    const std::uint64_t total = binom_u64(n, k);
    Mask h = full_mask(k);
    for (std::uint64_t i = 0; i < total; ++i, h = next_same_popcount(h)) all.push_back(h);
    std::shuffle(all.begin(), all.end(), rng);
    const int want = std::uniform_int_distribution<int>(1, max_edges)(rng);
    all.resize(static_cast<size_t>(std::min<std::uint64_t>(want, all.size())));
    return Family::make(n, k, std::move(all));
}

Family random_intersecting(std::mt19937_64& rng, int n, int k, int max_edges) {
    std::vector<Mask> all;
    const std::uint64_t total = binom_u64(n, k);
    Mask h = full_mask(k);
    for (std::uint64_t i = 0; i < total; ++i, h = next_same_popcount(h)) all.push_back(h);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Mask> chosen;
    for (Mask e : all) {
        if (static_cast<int>(chosen.size()) >= max_edges) break;
        bool ok = true;
        for (Mask f : chosen)
            if (!(e & f)) { ok = false; break; }
        if (ok) chosen.push_back(e);
    }
    return Family::make(n, k, std::move(chosen));
}

Family random_subfamily(std::mt19937_64& rng, const Family& f) {
    std::vector<Mask> edges;
    for (Mask e : f.edges)
        if (std::uniform_int_distribution<int>(0, 1)(rng)) edges.push_back(e);
    return Family::make(f.n, f.k, std::move(edges));
}

} // namespace

TEST_CASE("size splits at every vertex") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 10)(rng);
        const int k = std::uniform_int_distribution<int>(1, std::min(5, n))(rng);
        const Family f = random_family(rng, n, k, 14);
        const int x = std::uniform_int_distribution<int>(0, n - 1)(rng);
        const Mask xm = Mask{1} << x;
        CHECK(f.size() == degree(f, xm) + restrict_family(f, SubsetQuery{xm, 0}).size());
    }
}

TEST_CASE("diversity and degree are monotone under subfamilies") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 9)(rng);
        const int k = std::uniform_int_distribution<int>(2, std::min(4, n))(rng);
        const Family f = random_family(rng, n, k, 12);
        const Family g = random_subfamily(rng, f);
        const int ell = std::uniform_int_distribution<int>(0, std::min(k, n - 1))(rng);
        if (ell < n) CHECK(diversity(g, ell) <= diversity(f, ell));
        if (ell <= k) CHECK(max_degree(g, ell) <= max_degree(f, ell));
    }
}

TEST_CASE("intersecting families: edges are transversals, tau at most k") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 9)(rng);
        const int k = std::uniform_int_distribution<int>(2, std::min(4, n))(rng);
        const Family f = random_intersecting(rng, n, k, 10);
        REQUIRE(!f.edges.empty());
        CHECK(covering_number(f).size <= k);
        CHECK(matching_number(f) == 1);
    }
}

TEST_CASE("vertex degree exceeds the next diversity level") {
    // for an intersecting family and any vertex of the support,
    // |F(x)| >= gamma_{k-1}(F) + 1
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 9)(rng);
        const int k = std::uniform_int_distribution<int>(2, std::min(4, n))(rng);
        const Family f = random_intersecting(rng, n, k, 12);
        if (k - 1 >= n) continue;
        const std::uint64_t g = diversity(f, k - 1);
        for (int x : mask_vertices(support(f))) CHECK(degree(f, Mask{1} << x) >= g + 1);
    }
}

TEST_CASE("degree levels control each other under covering-number hypotheses") {
    // intersecting, tau >= j  =>  Delta_i <= k^(j-i) Delta_j for 1 <= i <= j <= k
    std::mt19937_64 rng(113);
    int usable = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = std::uniform_int_distribution<int>(4, 9)(rng);
        const int k = std::uniform_int_distribution<int>(2, std::min(4, n))(rng);
        const Family f = random_intersecting(rng, n, k, 14);
        const int tau = covering_number(f).size;
        if (tau < 2) continue;
        ++usable;
        for (int j = 2; j <= std::min(tau, k); ++j)
            for (int i = 1; i <= j; ++i) {
                std::uint64_t pw = 1;
                for (int p = 0; p < j - i; ++p) pw *= static_cast<std::uint64_t>(k);
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(i);
                CAPTURE(j);
                CHECK(max_degree(f, i) <= pw * max_degree(f, j));
            }
    }
    CHECK(usable > 200);
}

TEST_CASE("saturation preserves covering number at the cap") {
    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = std::uniform_int_distribution<int>(3, 4)(rng);
        const int n = std::uniform_int_distribution<int>(2 * k, 2 * k + 1)(rng);
        const Family f = random_intersecting(rng, n, k, 8);
        const Family s = saturate(f);
        CHECK(covering_number(s).size >= covering_number(f).size);
        const int ell = std::uniform_int_distribution<int>(1, k - 1)(rng);
        CHECK(diversity(s, ell) >= diversity(f, ell));
    }
}
