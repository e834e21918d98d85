#include "divlab/constructions.hpp"

#include <algorithm>

namespace divlab {

namespace {

Mask m_of(std::initializer_list<int> vs) {  // 1-based
    Mask m = 0;
    for (int v : vs) m |= Mask{1} << (v - 1);
    return m;
}

} // namespace

GeneratedFamily generated(const Family& gen, long n, int k) {
    return generated(gen.edges, popcount(support(gen)) == 0 ? 0 : (63 - std::countl_zero(support(gen)) + 1), n, k);
}

GeneratedFamily generated(std::vector<Mask> generators, int support_size, long n, int k) {
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (Mask g : generators) {
        if (popcount(g) > k)
            throw std::invalid_argument("generated: a generator is larger than the uniformity k");
        if (support_size < 64 && (g & ~full_mask(support_size)))
            throw std::invalid_argument("generated: generator outside the declared support");
    }
    if (n < support_size) throw std::invalid_argument("generated: ground set smaller than the generator support");
    return GeneratedFamily{n, k, support_size, std::move(generators)};
}

Family enumerate_generated(const GeneratedFamily& gf, std::uint64_t budget) {
    if (gf.n > 64) throw std::invalid_argument("enumerate_generated: ground set exceeds 64 vertices");
    const int n = static_cast<int>(gf.n);
    if (binom_u64(n, gf.k) > budget) throw std::invalid_argument("enumerate_generated: C(n,k) exceeds the budget");
    std::vector<Mask> edges;
    if (gf.k == 0) {
        if (std::binary_search(gf.generators.begin(), gf.generators.end(), Mask{0})) edges.push_back(0);
        return Family::make(n, 0, std::move(edges));
    }
    const std::uint64_t total = binom_u64(n, gf.k);
    Mask h = full_mask(gf.k);
    for (std::uint64_t r = 0; r < total; ++r, h = next_same_popcount(h)) {
        for (Mask g : gf.generators)
            if ((h & g) == g) {
                edges.push_back(h);
                break;
            }
    }
    return Family::make(n, gf.k, std::move(edges));
}

Family fano() {
    return Family::make(7, 3,
                        {m_of({1, 2, 3}), m_of({1, 4, 5}), m_of({1, 6, 7}), m_of({2, 4, 6}), m_of({2, 5, 7}),
                         m_of({3, 5, 6}), m_of({3, 4, 7})});
}

Family t0() {
    return Family::make(6, 3,
                        {m_of({1, 2, 3}), m_of({1, 2, 4}), m_of({3, 4, 5}), m_of({3, 4, 6}), m_of({1, 5, 6}),
                         m_of({2, 5, 6}), m_of({1, 3, 5}), m_of({2, 4, 5}), m_of({1, 4, 6}), m_of({2, 3, 6})});
}

Family l3() {
    std::vector<Mask> edges;
    for (int i = 0; i < 13; ++i) {
        Mask e = 0;
        for (int d : {0, 1, 3, 9}) e |= Mask{1} << ((i + d) % 13);
        edges.push_back(e);
    }
    return Family::make(13, 4, std::move(edges));
}

Family complete_kgraph(int n, int k) {
    std::vector<Mask> edges;
    if (k == 0) {
        edges.push_back(0);
    } else if (k <= n) {
        const std::uint64_t total = binom_u64(n, k);
        Mask h = full_mask(k);
        for (std::uint64_t r = 0; r < total; ++r, h = next_same_popcount(h)) edges.push_back(h);
    }
    return Family::make(n, k, std::move(edges));
}

Family triangle() { return complete_kgraph(3, 2); }

Family wreath(const Family& a, const Family& b) {
    const long total_n = static_cast<long>(a.n) * b.n;
    if (total_n > 64)
        throw std::invalid_argument("wreath: combined ground set needs " + std::to_string(total_n) +
                                    " > 64 vertices; use the counting formulas instead");
    std::vector<Mask> edges;
    std::vector<int> copies;
    for (Mask be : b.edges) {
        copies = mask_vertices(be);
        std::vector<Mask> partial{0};
        for (int ci : copies) {
            std::vector<Mask> next;
            next.reserve(partial.size() * a.edges.size());
            for (Mask p : partial)
                for (Mask ae : a.edges) next.push_back(p | (ae << (ci * a.n)));
            partial = std::move(next);
        }
        edges.insert(edges.end(), partial.begin(), partial.end());
    }
    return Family::make(static_cast<int>(total_n), a.k * b.k, std::move(edges));
}

Family parity_quads() {
    const int A[2] = {1, 2}, B[2] = {3, 4}, C[2] = {5, 6}, D[2] = {7, 8};
    const int E[3] = {9, 10, 11};
    std::vector<Mask> edges;
    for (const int* X : {A, B, C, D})
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) edges.push_back(m_of({X[0], X[1], E[i], E[j]}));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    if ((i + j + k) % 2 == 1) edges.push_back(m_of({A[i], B[j], C[k], D[l]}));
    return Family::make(11, 4, std::move(edges));
}

Family grid_quads() {
    const int U[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    std::vector<Mask> edges;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q)
                    edges.push_back(m_of({U[i][p], U[i][(p + 1) % 3], U[j][q], U[j][(q + 1) % 3]}));
    return Family::make(9, 4, std::move(edges));
}

Family pentagon_quads() {
    const int X[3] = {1, 2, 3};
    const int Y[5] = {4, 5, 6, 7, 8};
    const int Z[2] = {9, 10};
    std::vector<Mask> edges;
    std::vector<Mask> pairs_x;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) pairs_x.push_back(m_of({X[i], X[j]}));
    for (Mask ax : pairs_x) {
        for (int i = 0; i < 5; ++i) edges.push_back(ax | m_of({Y[i], Y[(i + 1) % 5]}));
        edges.push_back(ax | m_of({Z[0], Z[1]}));
    }
    for (int i = 0; i < 5; ++i)
        for (int z : Z) edges.push_back(m_of({Y[i], Y[(i + 1) % 5], Y[(i + 3) % 5], z}));
    return Family::make(10, 4, std::move(edges));
}

Family pentagon_cycle_product() {
    auto pent = [](int off) {
        std::vector<Mask> out;
        for (int i = 0; i < 5; ++i) out.push_back((m_of({i % 5 + 1, (i + 1) % 5 + 1})) << off);
        return out;
    };
    auto chords = [](int off) {
        std::vector<Mask> out;
        for (int i = 0; i < 5; ++i) out.push_back((m_of({i % 5 + 1, (i + 1) % 5 + 1, (i + 3) % 5 + 1})) << off);
        return out;
    };
    std::vector<Mask> edges;
    const int offs[3] = {0, 5, 10};
    for (int c = 0; c < 3; ++c)
        for (Mask p : pent(offs[c]))
            for (Mask r : chords(offs[(c + 1) % 3])) edges.push_back(p | r);
    return Family::make(15, 5, std::move(edges));
}

Family t0_triangle() { return wreath(t0(), triangle()); }

Family ekr_triangle(int k) {
    if (k < 1 || k > 10) throw std::invalid_argument("ekr_triangle: need 1 <= k <= 10 (3(2k-1) <= 64)");
    return wreath(complete_kgraph(2 * k - 1, k), triangle());
}

} // namespace divlab
