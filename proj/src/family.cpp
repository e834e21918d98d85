#include "divlab/family.hpp"

#include <algorithm>
#include <atomic>
#include <omp.h>
#include <stdexcept>
#include <unordered_map>

namespace divlab {

namespace {

std::string edge_to_string(Mask e) {
    std::string s = "[";
    for (int v : mask_vertices(e)) {
        if (s.size() > 1) s += ",";
        s += std::to_string(v + 1);
    }
    return s + "]";
}

} // namespace

bool Family::contains(Mask e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

Family Family::make(int n, int k, std::vector<Mask> edges) {
    if (n < 0 || n > 64) throw std::invalid_argument("ground set size must be in [0,64], got " + std::to_string(n));
    if (k < 0 || k > n) throw std::invalid_argument("uniformity must be in [0,n], got k=" + std::to_string(k));
    const Mask universe = full_mask(n);
    for (Mask e : edges) {
        if (e & ~universe)
            throw std::invalid_argument("edge " + edge_to_string(e) + " uses a vertex beyond n=" + std::to_string(n));
        if (popcount(e) != k)
            throw std::invalid_argument("edge " + edge_to_string(e) + " has " + std::to_string(popcount(e)) +
                                        " vertices, expected k=" + std::to_string(k));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Family{n, k, std::move(edges)};
}

Mask support(const Family& fam) {
    Mask m = 0;
    for (Mask e : fam.edges) m |= e;
    return m;
}

Family restrict_family(const Family& fam, SubsetQuery q) {
    if (q.avoid & q.require) throw std::invalid_argument("restriction query: avoid and require sets overlap");
    Family out;
    out.n = fam.n;
    out.k = fam.k;
    for (Mask e : fam.edges)
        if (!(e & q.avoid) && (e & q.require) == q.require) out.edges.push_back(e);
    return out;
}

Family link(const Family& fam, Mask s) {
    if (popcount(s) > fam.k) throw std::invalid_argument("link set larger than uniformity");
    std::vector<Mask> out;
    for (Mask e : fam.edges)
        if ((e & s) == s) out.push_back(e & ~s);
    std::sort(out.begin(), out.end());
    Family res;
    res.n = fam.n;
    res.k = fam.k - popcount(s);
    res.edges = std::move(out);
    return res;
}

std::uint64_t degree(const Family& fam, Mask s) {
    std::uint64_t c = 0;
    for (Mask e : fam.edges)
        if ((e & s) == s) ++c;
    return c;
}

std::uint64_t max_degree(const Family& fam, int ell) {
    if (ell < 0 || ell > fam.k) throw std::invalid_argument("max_degree: need 0 <= ell <= k");
    if (fam.edges.empty()) return 0;
    if (ell == 0) return fam.size();
    // Each edge contributes one count to each of its ell-subsets; after the
    // pass the map holds |fam(S)| for every S contained in some edge.
    std::unordered_map<Mask, std::uint64_t> cnt;
    cnt.reserve(fam.size() * binom_u64(fam.k, ell));
    std::vector<int> vs;
    for (Mask e : fam.edges) {
        vs = mask_vertices(e);
        for (Combinations c(fam.k, ell); !c.done(); c.next()) {
            Mask s = 0;
            for (int i : c.indices()) s |= Mask{1} << vs[static_cast<size_t>(i)];
            ++cnt[s];
        }
    }
    std::uint64_t best = 0;
    for (const auto& [s, c] : cnt) best = std::max(best, c);
    return best;
}

std::uint64_t diversity(const Family& fam, int ell) {
    if (ell < 0 || ell >= fam.n) throw std::invalid_argument("diversity: need 0 <= ell < n");
    if (fam.edges.empty()) return 0;
    const Mask supp = support(fam);
    const int s = popcount(supp);
    const int outside = fam.n - s;
    const std::vector<int> sv = mask_vertices(supp);

    // Vertices off the support leave every edge untouched, so a candidate
    // S is (j chosen support vertices) + (ell - j interchangeable outside
    // ones); only the support part affects the count.
    std::vector<Mask> candidates;
    for (int j = std::max(0, ell - outside); j <= std::min(ell, s); ++j) {
        for (Combinations c(s, j); !c.done(); c.next()) {
            Mask t = 0;
            for (int i : c.indices()) t |= Mask{1} << sv[static_cast<size_t>(i)];
            candidates.push_back(t);
        }
    }

    std::uint64_t best = ~std::uint64_t{0};
    const auto& edges = fam.edges;
#pragma omp parallel for schedule(static) reduction(min : best)
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Mask t = candidates[i];
        std::uint64_t c = 0;
        for (Mask e : edges)
            if (!(e & t)) ++c;
        best = std::min(best, c);
    }
    return best;
}

namespace {

void hitting_rec(const std::vector<Mask>& sets, Mask chosen, int used, CoverResult& best) {
    Mask uncovered = 0;
    for (Mask s : sets)
        if (!(s & chosen)) { uncovered = s; break; }
    if (!uncovered) {
        if (used < best.size) { best.size = used; best.witness = chosen; }
        return;
    }
    if (used + 1 >= best.size) return;
    Mask rest = uncovered;
    while (rest) {
        const Mask bit = rest & (~rest + 1);
        rest &= rest - 1;
        hitting_rec(sets, chosen | bit, used + 1, best);
    }
}

} // namespace

CoverResult min_hitting_set(const std::vector<Mask>& sets) {
    if (sets.empty()) return {0, 0};
    for (Mask s : sets)
        if (!s) throw std::invalid_argument("min_hitting_set: a set is empty, no transversal exists");
    Mask uni = 0;
    for (Mask s : sets) uni |= s;
    CoverResult best{popcount(uni) + 1, 0};
    hitting_rec(sets, 0, 0, best);
    if (best.size > popcount(uni)) { best.size = popcount(uni); best.witness = uni; }
    return best;
}

CoverResult covering_number(const Family& fam) { return min_hitting_set(fam.edges); }

namespace {

void matching_rec(const std::vector<Mask>& edges, std::size_t i, Mask used, int cnt, int& best) {
    best = std::max(best, cnt);
    for (std::size_t j = i; j < edges.size(); ++j) {
        if (edges[j] & used) continue;
        matching_rec(edges, j + 1, used | edges[j], cnt + 1, best);
    }
}

} // namespace

int matching_number(const Family& fam) {
    int best = 0;
    matching_rec(fam.edges, 0, 0, 0, best);
    return best;
}

bool is_intersecting(const std::vector<Mask>& edges) {
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (!(edges[i] & edges[j])) return false;
    return true;
}

bool is_intersecting(const Family& fam) { return is_intersecting(fam.edges); }

namespace {

// Branching on the first set missed by the partial transversal reaches every
// minimal transversal of size <= depth_cap; non-minimal hits are filtered out
// afterwards.
void transversal_rec(const std::vector<Mask>& sets, Mask chosen, int used, int cap, std::vector<Mask>& out) {
    Mask uncovered = 0;
    bool all = true;
    for (Mask s : sets)
        if (!(s & chosen)) { uncovered = s; all = false; break; }
    if (all) { out.push_back(chosen); return; }
    if (used == cap) return;
    Mask rest = uncovered;
    while (rest) {
        const Mask bit = rest & (~rest + 1);
        rest &= rest - 1;
        transversal_rec(sets, chosen | bit, used + 1, cap, out);
    }
}

} // namespace

std::vector<Mask> basis(const Family& fam) {
    std::vector<Mask> cand;
    transversal_rec(fam.edges, 0, 0, fam.k, cand);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<Mask> out;
    for (Mask t : cand) {
        bool minimal = true;
        for (Mask o : cand)
            if (o != t && (o & t) == o) { minimal = false; break; }
        if (minimal) out.push_back(t);
    }
    return out;
}

bool is_saturated(const Family& fam, std::uint64_t budget) {
    const std::uint64_t total = binom_u64(fam.n, fam.k);
    if (total > budget)
        throw std::invalid_argument("is_saturated: C(n,k) exceeds the scan budget");
    if (fam.k == 0) return true;

    const auto& edges = fam.edges;
    std::atomic<bool> saturated{true};
    const int nthreads = omp_get_max_threads();
#pragma omp parallel for schedule(static)
    for (int t = 0; t < nthreads; ++t) {
        const std::uint64_t lo = total * static_cast<std::uint64_t>(t) / static_cast<std::uint64_t>(nthreads);
        const std::uint64_t hi = total * static_cast<std::uint64_t>(t + 1) / static_cast<std::uint64_t>(nthreads);
        if (lo >= hi) continue;
        Mask h = mask_from_colex_rank(lo, fam.k);
        for (std::uint64_t r = lo; r < hi; ++r, h = next_same_popcount(h)) {
            if (!saturated.load(std::memory_order_relaxed)) break;
            if (std::binary_search(edges.begin(), edges.end(), h)) continue;
            bool meets_all = true;
            for (Mask e : edges)
                if (!(e & h)) { meets_all = false; break; }
            if (meets_all) {
                saturated.store(false, std::memory_order_relaxed);
                break;
            }
        }
    }
    return saturated.load();
}

Family saturate(const Family& fam) {
    if (!is_intersecting(fam)) throw std::invalid_argument("saturate: input family is not intersecting");
    if (fam.k == 0) return fam;
    std::vector<Mask> edges = fam.edges;
    const std::uint64_t total = binom_u64(fam.n, fam.k);
    Mask h = full_mask(fam.k);
    for (std::uint64_t r = 0; r < total; ++r, h = next_same_popcount(h)) {
        bool ok = true;
        for (Mask e : edges)
            if (!(e & h)) { ok = false; break; }
        if (ok && !std::binary_search(fam.edges.begin(), fam.edges.end(), h)) edges.push_back(h);
    }
    return Family::make(fam.n, fam.k, std::move(edges));
}

FamilyStats analyze(const Family& fam, bool with_saturation) {
    FamilyStats st;
    st.size = fam.size();
    st.delta.resize(static_cast<size_t>(fam.k) + 1);
    for (int l = 0; l <= fam.k; ++l) st.delta[static_cast<size_t>(l)] = max_degree(fam, l);
    const int gmax = std::min(fam.k, fam.n);  // diversity defined for ell < n
    st.gamma.resize(static_cast<size_t>(std::max(gmax, 0)));
    for (int l = 0; l < gmax; ++l) st.gamma[static_cast<size_t>(l)] = diversity(fam, l);
    const CoverResult cov = covering_number(fam);
    st.tau = cov.size;
    st.tau_witness = cov.witness;
    st.nu = matching_number(fam);
    st.intersecting = is_intersecting(fam);
    st.basis_sets = st.intersecting ? basis(fam) : std::vector<Mask>{};
    st.saturated = st.intersecting && with_saturation && is_saturated(fam);
    return st;
}

} // namespace divlab
