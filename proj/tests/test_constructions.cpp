#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divlab/canon.hpp"
#include "divlab/constructions.hpp"
#include "divlab/counting.hpp"
#include "divlab/serial_ref.hpp"

using namespace divlab;

namespace {

Mask m_of(std::initializer_list<int> vs) {
    Mask m = 0;
    for (int v : vs) m |= Mask{1} << (v - 1);
    return m;
}

// every transversal of the support contains an edge
bool every_transversal_contains_edge(const Family& f) {
    const Mask supp = support(f);
    const std::vector<int> sv = mask_vertices(supp);
    for (Mask sub = 0;; sub = (sub - supp) & supp) {  // subsets of supp
        bool transversal = true;
        for (Mask e : f.edges)
            if (!(e & sub)) { transversal = false; break; }
        if (transversal) {
            bool contains = false;
            for (Mask e : f.edges)
                if ((e & sub) == e) { contains = true; break; }
            if (!contains) return false;
        }
        if (sub == supp) break;
    }
    return true;
}

} // namespace

TEST_CASE("base families") {
    CHECK(t0().size() == 10);
    CHECK(fano().size() == 7);
    CHECK(l3().size() == 13);
    CHECK(l3().k == 4);
    for (const Family& f : {t0(), fano(), l3()}) CHECK(is_intersecting(f));
    for (Mask a : fano().edges)
        for (Mask b : fano().edges)
            if (a != b) CHECK(popcount(a & b) == 1);
    // each vertex of the 7-point plane lies on 3 lines
    for (int v = 0; v < 7; ++v) CHECK(degree(fano(), Mask{1} << v) == 3);
    CHECK(diversity(fano(), 2) == 2);
}

TEST_CASE("three-chromatic witnesses are saturated") {
    CHECK(every_transversal_contains_edge(t0()));
    CHECK(every_transversal_contains_edge(fano()));
    CHECK(is_saturated(t0()));
    CHECK(is_saturated(fano()));
    // generated families inherit saturation once disjoint k-sets exist
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{7, 3}, {8, 4}, {9, 4}, {10, 5}, {12, 5}}) {
        const Family g = enumerate_generated(generated(fano(), n, k));
        CAPTURE(n);
        CAPTURE(k);
        CHECK(is_saturated(g));
    }
}

TEST_CASE("generated families") {
    CHECK(enumerate_generated(generated(fano(), 7, 3)).edges == fano().edges);
    CHECK(enumerate_generated(generated(fano(), 8, 4)).size() == 35);
    CHECK_THROWS_AS(generated(l3(), 20, 3), std::invalid_argument);  // k below generator size
    // closed double-diversity form for the 10-triple generator
    for (int n = 8; n <= 12; ++n)
        for (int k = 3; k <= 5; ++k) {
            const Family g = enumerate_generated(generated(t0(), n, k));
            const BigInt expect = 2 * binom(n - 5, k - 3) - binom(n - 6, k - 4);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(BigInt(diversity(g, 2)) == expect);
        }
}

TEST_CASE("wreath product laws") {
    const Family w = wreath(triangle(), triangle());
    CHECK(w.size() == 27);
    CHECK(w.k == 4);
    CHECK(w.n == 9);
    CHECK(is_isomorphic(w, grid_quads()));
    CHECK(covering_number(w).size == covering_number(triangle()).size * covering_number(triangle()).size);
    // single-edge factors collapse
    const Family single = Family::make(3, 3, {m_of({1, 2, 3})});
    const Family point = Family::make(1, 1, {m_of({1})});
    CHECK(wreath(single, point).size() == 1);
    CHECK(wreath(single, point).k == 3);
    CHECK_THROWS_AS(wreath(complete_kgraph(9, 4), complete_kgraph(8, 3)), std::invalid_argument);
}

TEST_CASE("quad witnesses have the documented stats") {
    const Family a = parity_quads();
    CHECK(a.size() == 20);
    CHECK(a.n == 11);
    CHECK(diversity(a, 3) == 3);
    CHECK(covering_number(a).size == 4);

    const Family b = grid_quads();
    CHECK(b.size() == 27);
    CHECK(diversity(b, 3) == 3);
    CHECK(covering_number(b).size == 4);

    const Family c = pentagon_quads();
    CHECK(c.size() == 28);
    CHECK(c.n == 10);
    CHECK(diversity(c, 3) == 3);
    CHECK(covering_number(c).size == 4);

    for (const Family& f : {a, b, c}) CHECK(is_intersecting(f));

    // the pentagon relabeling y_i -> y_{i+1} preserves the third witness
    std::vector<int> perm{0, 1, 2, 4, 5, 6, 7, 3, 8, 9};
    std::vector<Mask> img;
    for (Mask e : c.edges) {
        Mask m = 0;
        for (int v : mask_vertices(e)) m |= Mask{1} << perm[static_cast<size_t>(v)];
        img.push_back(m);
    }
    std::sort(img.begin(), img.end());
    CHECK(img == c.edges);
}

TEST_CASE("lower-bound products") {
    const Family p = pentagon_cycle_product();
    CHECK(p.size() == 75);
    CHECK(p.n == 15);
    CHECK(p.k == 5);
    CHECK(is_intersecting(p));

    const Family t = t0_triangle();
    CHECK(t.size() == 300);
    CHECK(t.n == 18);
    CHECK(t.k == 6);
    CHECK(is_intersecting(t));

    const Family e2 = ekr_triangle(2);
    CHECK(e2.size() == 27);
    CHECK(e2.k == 4);
    CHECK(covering_number(e2).size == 4);
    CHECK_THROWS_AS(ekr_triangle(11), std::invalid_argument);
}

TEST_CASE("size identity versus triple diversity on the 10-triple family") {
    // the whole family is more than three times its double diversity
    CHECK(t0().size() > 3 * diversity(t0(), 2));
}

TEST_CASE("complete family covering number") {
    for (int k = 2; k <= 4; ++k) CHECK(covering_number(complete_kgraph(2 * k - 1, k)).size == k);
}
