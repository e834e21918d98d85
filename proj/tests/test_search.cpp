#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "divlab/canon.hpp"
#include "divlab/constructions.hpp"
#include "divlab/search.hpp"

using namespace divlab;

namespace {

// every intersecting family on [n] by unpruned subset recursion, canonized
std::set<CanonicalForm> naive_intersecting_classes(int k, int n) {
    std::vector<Mask> all;
    const std::uint64_t total = binom_u64(n, k);
    Mask h = full_mask(k);
    for (std::uint64_t i = 0; i < total; ++i, h = next_same_popcount(h)) all.push_back(h);
    std::set<CanonicalForm> forms;
    std::vector<Mask> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        forms.insert(canonical_form(Family::make(n, k, cur)));
        for (std::size_t j = i; j < all.size(); ++j) {
            bool ok = true;
            for (Mask f : cur)
                if (!(f & all[j])) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(all[j]);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return forms;
}

} // namespace

TEST_CASE("orderly generation visits each class exactly once") {
    for (const auto& [n, expected] : std::vector<std::pair<int, std::size_t>>{{5, 34}, {6, 194}}) {
        std::set<std::vector<Mask>> seen;
        std::uint64_t visits = 0;
        enumerate_canonical_intersecting(3, n, [&](const std::vector<Mask>& w, int) {
            ++visits;
            CHECK(seen.insert(w).second);  // no duplicates
            return true;
        });
        CAPTURE(n);
        CHECK(visits == expected);
        CHECK(seen.size() == expected);
        CHECK(naive_intersecting_classes(3, n).size() == expected);
    }
}

TEST_CASE("pruned and unpruned searches agree on a small scope") {
    // unpruned: enumerate everything, evaluate the constraints directly
    const int n = 6, k = 3, ell = 2, tau_min = 3;
    std::uint64_t best = 0;
    std::set<CanonicalForm> best_forms;
    enumerate_canonical_intersecting(k, n, [&](const std::vector<Mask>& w, int s) {
        if (!w.empty()) {
            const Family f = Family::make(n, k, w);
            if (covering_number(f).size >= tau_min) {
                const std::uint64_t g = diversity(f, ell);
                if (g > best) {
                    best = g;
                    best_forms.clear();
                }
                if (g == best) {
                    CanonicalForm cf;
                    cf.support_size = s;
                    cf.k = k;
                    cf.word = w;
                    best_forms.insert(cf);
                }
            }
        }
        return true;
    });

    SearchTask task;
    task.k = k;
    task.ell = ell;
    task.tau_min = tau_min;
    task.n_max = n;
    const SearchReport rep = run_search(task);
    CHECK(rep.exhausted);
    CHECK(rep.optimum == best);
    CHECK(rep.witnesses.size() == best_forms.size());
    for (const CanonicalForm& f : rep.witnesses) CHECK(best_forms.count(f) == 1);
}

TEST_CASE("double diversity maximum at scope 6: the 10-triple family alone") {
    SearchTask task;
    task.k = 3;
    task.ell = 2;
    task.tau_min = 3;
    task.n_max = 6;
    const SearchReport rep = run_search(task);
    REQUIRE(rep.exhausted);
    CHECK(rep.optimum == 2);
    REQUIRE(rep.witnesses.size() == 1);
    CHECK(rep.witnesses[0] == canonical_form(t0()));
}

TEST_CASE("double diversity maximum at scope 7 adds the 7-line family") {
    SearchTask task;
    task.k = 3;
    task.ell = 2;
    task.tau_min = 3;
    task.n_max = 7;
    task.seed_gamma = 2;
    const SearchReport rep = run_search(task);
    REQUIRE(rep.exhausted);
    CHECK(rep.optimum == 2);
    std::vector<CanonicalForm> expected{canonical_form(fano()), canonical_form(t0())};
    std::sort(expected.begin(), expected.end());
    CHECK(rep.witnesses == expected);
}

TEST_CASE("diversity maximum at scope 7: unique witness") {
    SearchTask task;
    task.k = 3;
    task.ell = 1;
    task.tau_min = 3;
    task.n_max = 7;
    task.seed_gamma = 5;
    const SearchReport rep = run_search(task);
    REQUIRE(rep.exhausted);
    CHECK(rep.optimum == 5);
    REQUIRE(rep.witnesses.size() == 1);
    CHECK(rep.witnesses[0] == canonical_form(t0()));
}

TEST_CASE("triangle task") {
    SearchTask task;
    task.k = 2;
    task.ell = 1;
    task.tau_min = 2;
    task.n_max = 5;
    const SearchReport rep = run_search(task);
    REQUIRE(rep.exhausted);
    CHECK(rep.optimum == 1);
    REQUIRE(rep.witnesses.size() == 1);
    CHECK(rep.witnesses[0] == canonical_form(triangle()));
}

TEST_CASE("seeded and unseeded runs agree") {
    SearchTask a;
    a.k = 3;
    a.ell = 2;
    a.tau_min = 3;
    a.n_max = 7;
    SearchTask b = a;
    b.seed_gamma = 2;
    const SearchReport ra = run_search(a);
    const SearchReport rb = run_search(b);
    CHECK(ra.optimum == rb.optimum);
    CHECK(ra.witnesses == rb.witnesses);
    // the collection pass is threshold-fixed, so node counts agree too
    CHECK(ra.nodes_explored == rb.nodes_explored);
}

TEST_CASE("parallel and serial runs produce identical reports") {
    SearchTask a;
    a.k = 3;
    a.ell = 2;
    a.tau_min = 3;
    a.n_max = 7;
    a.seed_gamma = 2;
    SearchTask b = a;
    a.jobs = 1;
    b.jobs = 4;
    const SearchReport ra = run_search(a);
    const SearchReport rb = run_search(b);
    CHECK(ra.optimum == rb.optimum);
    CHECK(ra.witnesses == rb.witnesses);
    CHECK(ra.nodes_explored == rb.nodes_explored);
    CHECK(ra.exhausted == rb.exhausted);
}

TEST_CASE("node budget reports honestly") {
    SearchTask task;
    task.k = 3;
    task.ell = 2;
    task.tau_min = 3;
    task.n_max = 8;
    task.seed_gamma = 2;
    task.budget_nodes = 10;
    const SearchReport rep = run_search(task);
    CHECK_FALSE(rep.exhausted);
}

TEST_CASE("classification scan finds no counterexample at small scopes") {
    for (int n_max : {6, 7}) {
        const SearchReport rep = classify_triples(n_max);
        CAPTURE(n_max);
        CHECK(rep.exhausted);
        CHECK(rep.witnesses.empty());
    }
}

TEST_CASE("classification regression: dropping an edge breaks the pair condition") {
    // removing one triple leaves a 9-edge family in which some pair inside an
    // edge is avoided by at most one edge
    std::vector<Mask> edges = t0().edges;
    edges.erase(std::remove(edges.begin(), edges.end(), Mask{0b100110}), edges.end());
    const Family f = Family::make(6, 3, edges);
    REQUIRE(f.size() == 9);
    bool degenerate = false;
    for (Mask e : f.edges)
        for (int a : mask_vertices(e))
            for (int b : mask_vertices(e)) {
                if (a >= b) continue;
                const Mask p = (Mask{1} << a) | (Mask{1} << b);
                std::uint64_t cnt = 0;
                for (Mask g : f.edges)
                    if (!(g & p)) ++cnt;
                if (cnt <= 1) degenerate = true;
            }
    CHECK(degenerate);
}

TEST_CASE("quad certificate at small scopes") {
    for (int n_max : {7, 8}) {
        const SearchReport rep = certify_quad_triple_diversity(n_max);
        CAPTURE(n_max);
        CHECK(rep.exhausted);
        CHECK(rep.witnesses.empty());
    }
}

TEST_CASE("complementary-pair reduction cross-check at scope 6, k=3") {
    // on [6] a maximal intersecting 3-family picks one triple from each of
    // the ten complementary pairs; scanning all 2^10 selections for double
    // diversity >= 2 must find exactly the 10-triple class, matching the
    // generic engine's verdict at the same scope
    std::vector<Mask> side_a, side_b;
    for (Mask e : complete_kgraph(6, 3).edges)
        if (e & 1) {
            side_a.push_back(e);
            side_b.push_back(~e & full_mask(6));
        }
    REQUIRE(side_a.size() == 10);
    std::set<CanonicalForm> hits;
    for (unsigned sel = 0; sel < (1u << 10); ++sel) {
        std::vector<Mask> edges;
        for (std::size_t i = 0; i < 10; ++i) edges.push_back(sel >> i & 1 ? side_a[i] : side_b[i]);
        const Family f = Family::make(6, 3, std::move(edges));
        REQUIRE(is_intersecting(f));
        if (diversity(f, 2) >= 2) hits.insert(canonical_form(f));
    }
    REQUIRE(hits.size() == 1);
    CHECK(*hits.begin() == canonical_form(t0()));
}
