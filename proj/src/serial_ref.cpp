#include "divlab/serial_ref.hpp"

#include <algorithm>
#include <stdexcept>

namespace divlab::ref {

std::uint64_t diversity_full(const Family& fam, int ell) {
    if (ell < 0 || ell >= fam.n) throw std::invalid_argument("diversity_full: need 0 <= ell < n");
    if (fam.edges.empty()) return 0;
    std::uint64_t best = ~std::uint64_t{0};
    for (Combinations c(fam.n, ell); !c.done(); c.next()) {
        Mask s = 0;
        for (int i : c.indices()) s |= Mask{1} << i;
        std::uint64_t cnt = 0;
        for (Mask e : fam.edges)
            if (!(e & s)) ++cnt;
        best = std::min(best, cnt);
    }
    return best;
}

std::uint64_t max_degree_full(const Family& fam, int ell) {
    if (fam.edges.empty()) return 0;
    std::uint64_t best = 0;
    for (Combinations c(fam.n, ell); !c.done(); c.next()) {
        Mask s = 0;
        for (int i : c.indices()) s |= Mask{1} << i;
        std::uint64_t cnt = 0;
        for (Mask e : fam.edges)
            if ((e & s) == s) ++cnt;
        best = std::max(best, cnt);
    }
    return best;
}

int covering_number_bruteforce(const Family& fam) {
    if (fam.edges.empty()) return 0;
    const std::vector<int> sv = mask_vertices(support(fam));
    const int s = static_cast<int>(sv.size());
    for (int size = 0; size <= s; ++size) {
        for (Combinations c(s, size); !c.done(); c.next()) {
            Mask t = 0;
            for (int i : c.indices()) t |= Mask{1} << sv[static_cast<size_t>(i)];
            bool hits = true;
            for (Mask e : fam.edges)
                if (!(e & t)) { hits = false; break; }
            if (hits) return size;
        }
    }
    return s;
}

std::vector<Mask> minimal_transversals_bruteforce(const Family& fam) {
    const std::vector<int> sv = mask_vertices(support(fam));
    const int s = static_cast<int>(sv.size());
    std::vector<Mask> trans;
    for (int size = 0; size <= fam.k; ++size) {
        for (Combinations c(s, size); !c.done(); c.next()) {
            Mask t = 0;
            for (int i : c.indices()) t |= Mask{1} << sv[static_cast<size_t>(i)];
            bool hits = true;
            for (Mask e : fam.edges)
                if (!(e & t)) { hits = false; break; }
            if (hits) trans.push_back(t);
        }
    }
    std::vector<Mask> out;
    for (Mask t : trans) {
        bool minimal = true;
        for (Mask o : trans)
            if (o != t && (o & t) == o) { minimal = false; break; }
        if (minimal) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_saturated_serial(const Family& fam) {
    if (fam.k == 0) return true;
    const std::uint64_t total = binom_u64(fam.n, fam.k);
    Mask h = full_mask(fam.k);
    for (std::uint64_t r = 0; r < total; ++r, h = next_same_popcount(h)) {
        if (fam.contains(h)) continue;
        bool meets_all = true;
        for (Mask e : fam.edges)
            if (!(e & h)) { meets_all = false; break; }
        if (meets_all) return false;
    }
    return true;
}

namespace {

// Relabel the family's support to 0..s-1 in ascending label order.
std::vector<Mask> compact(const Family& f) {
    const std::vector<int> sv = mask_vertices(support(f));
    std::vector<Mask> out;
    out.reserve(f.edges.size());
    for (Mask e : f.edges) {
        Mask m = 0;
        for (std::size_t i = 0; i < sv.size(); ++i)
            if (e >> sv[i] & 1) m |= Mask{1} << i;
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool isomorphic_bruteforce(const Family& a, const Family& b) {
    const std::vector<Mask> ea = compact(a);
    const std::vector<Mask> eb = compact(b);
    const int s = popcount(support(a));
    if (s != popcount(support(b)) || ea.size() != eb.size() || a.k != b.k) return false;
    std::vector<int> perm(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) perm[static_cast<size_t>(i)] = i;
    do {
        std::vector<Mask> img;
        img.reserve(ea.size());
        for (Mask e : ea) {
            Mask m = 0;
            for (int i = 0; i < s; ++i)
                if (e >> i & 1) m |= Mask{1} << perm[static_cast<size_t>(i)];
            img.push_back(m);
        }
        std::sort(img.begin(), img.end());
        if (img == eb) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace divlab::ref
