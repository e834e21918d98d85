#include "divlab/canon.hpp"

#include <algorithm>
#include <stdexcept>

namespace divlab {

namespace {

inline bool below_pow2(Mask m, int p) { return p >= 64 || m < (Mask{1} << p); }

// Backtracking minimizer over support labelings.
//
// Labels 0..s-1 are assigned one at a time. Assigning label d to an old
// vertex v "completes" the edges whose vertices now all carry labels; their
// relabeled masks lie in [2^d, 2^{d+1}) and extend the sorted word prefix,
// so each batch can be compared against the matching segment of the
// incumbent word. A branch is cut as soon as its prefix exceeds the
// incumbent; a strictly smaller prefix is completed greedily and becomes the
// new incumbent. The search loop restarts until no smaller word exists.
struct Canonizer {
    int s = 0;
    std::vector<Mask> edges;
    std::vector<std::vector<int>> vert_edges;
    std::vector<Mask> best;

    std::vector<int> newlabel;
    Mask assigned = 0;
    std::vector<std::vector<Mask>> scratch;
    std::uint64_t leaf_count = 0;

    Canonizer(std::vector<Mask> in, int support_size) : s(support_size), edges(std::move(in)) {
        vert_edges.assign(static_cast<size_t>(s), {});
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (int v : mask_vertices(edges[i])) vert_edges[static_cast<size_t>(v)].push_back(static_cast<int>(i));
        newlabel.assign(static_cast<size_t>(s), -1);
        scratch.assign(static_cast<size_t>(s) + 1, {});
    }

    void reset() {
        assigned = 0;
        std::fill(newlabel.begin(), newlabel.end(), -1);
    }

    void assign(int v, int d) {
        assigned |= Mask{1} << v;
        newlabel[static_cast<size_t>(v)] = d;
    }
    void unassign(int v) {
        assigned &= ~(Mask{1} << v);
        newlabel[static_cast<size_t>(v)] = -1;
    }

    void batch_of(int v, int d, std::vector<Mask>& out) const {
        out.clear();
        const Mask ok = assigned | (Mask{1} << v);
        for (int ei : vert_edges[static_cast<size_t>(v)]) {
            const Mask e = edges[static_cast<size_t>(ei)];
            if (e & ~ok) continue;
            Mask m = 0;
            Mask rest = e;
            while (rest) {
                const int u = std::countr_zero(rest);
                rest &= rest - 1;
                m |= Mask{1} << (u == v ? d : newlabel[static_cast<size_t>(u)]);
            }
            out.push_back(m);
        }
        std::sort(out.begin(), out.end());
    }

    enum class Cmp { Smaller, Equal, Greater };

    Cmp compare_batch(const std::vector<Mask>& batch, std::size_t pos, int d) const {
        for (std::size_t t = 0; t < batch.size(); ++t) {
            const Mask b = batch[t];
            const Mask w = best[pos + t];
            if (b < w) return Cmp::Smaller;
            if (b > w) return Cmp::Greater;
        }
        const std::size_t q = pos + batch.size();
        if (q < best.size() && below_pow2(best[q], d + 1)) return Cmp::Greater;
        return Cmp::Equal;
    }

    // From an already-smaller prefix: extend label by label, always taking a
    // candidate with the lexicographically least batch. The result is some
    // word below the incumbent; the restart loop will keep tightening it.
    void complete_greedy(std::vector<Mask>& word, int d) {
        std::vector<Mask> tmp;
        for (; d < s; ++d) {
            int best_v = -1;
            std::vector<Mask>& bb = scratch[static_cast<size_t>(s)];
            for (int v = 0; v < s; ++v) {
                if (assigned >> v & 1) continue;
                batch_of(v, d, tmp);
                if (best_v < 0 || tmp < bb) {
                    bb = tmp;
                    best_v = v;
                }
            }
            assign(best_v, d);
            word.insert(word.end(), bb.begin(), bb.end());
        }
        best = word;
    }

    bool find_smaller(int d, std::size_t pos) {
        if (d == s) return false;
        std::vector<Mask>& batch = scratch[static_cast<size_t>(d)];
        for (int v = 0; v < s; ++v) {
            if (assigned >> v & 1) continue;
            batch_of(v, d, batch);
            const Cmp c = compare_batch(batch, pos, d);
            if (c == Cmp::Greater) continue;
            if (c == Cmp::Smaller) {
                std::vector<Mask> word(best.begin(), best.begin() + static_cast<long>(pos));
                word.insert(word.end(), batch.begin(), batch.end());
                assign(v, d);
                complete_greedy(word, d + 1);
                return true;
            }
            const std::size_t bs = batch.size();
            assign(v, d);
            const bool found = find_smaller(d + 1, pos + bs);
            unassign(v);
            if (found) return true;
        }
        return false;
    }

    void count_equal(int d, std::size_t pos) {
        if (d == s) {
            ++leaf_count;
            return;
        }
        std::vector<Mask>& batch = scratch[static_cast<size_t>(d)];
        for (int v = 0; v < s; ++v) {
            if (assigned >> v & 1) continue;
            batch_of(v, d, batch);
            if (compare_batch(batch, pos, d) != Cmp::Equal) continue;
            const std::size_t bs = batch.size();
            assign(v, d);
            count_equal(d + 1, pos + bs);
            unassign(v);
        }
    }

    std::vector<Mask> minimize() {
        reset();
        std::vector<Mask> word;
        word.reserve(edges.size());
        complete_greedy(word, 0);
        while (true) {
            reset();
            if (!find_smaller(0, 0)) break;
        }
        return best;
    }
};

// Relabel the support to 0..s-1 preserving label order.
std::pair<std::vector<Mask>, int> compact_support(const Family& fam) {
    const std::vector<int> sv = mask_vertices(support(fam));
    std::vector<Mask> out;
    out.reserve(fam.edges.size());
    for (Mask e : fam.edges) {
        Mask m = 0;
        for (std::size_t i = 0; i < sv.size(); ++i)
            if (e >> sv[i] & 1) m |= Mask{1} << i;
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return {std::move(out), static_cast<int>(sv.size())};
}

} // namespace

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string bytes;
    auto push = [&](std::uint64_t v, int nbytes) {
        for (int i = nbytes - 1; i >= 0; --i) bytes.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    };
    push(static_cast<std::uint64_t>(support_size), 1);
    push(static_cast<std::uint64_t>(k), 1);
    push(word.size(), 4);
    int mask_bytes = (support_size + 7) / 8;
    if (mask_bytes == 0) mask_bytes = 1;
    for (Mask m : word) push(m, mask_bytes);
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

CanonicalForm canonical_form(const Family& fam) {
    auto [word, s] = compact_support(fam);
    if (s == 0) return CanonicalForm{0, fam.k, std::move(word)};
    Canonizer cz(std::move(word), s);
    CanonicalForm form;
    form.support_size = s;
    form.k = fam.k;
    form.word = cz.minimize();
    return form;
}

std::uint64_t automorphism_count(const Family& fam) {
    auto [word, s] = compact_support(fam);
    if (s == 0) return 1;
    Canonizer cz(word, s);
    cz.best = cz.minimize();
    cz.reset();
    cz.leaf_count = 0;
    cz.count_equal(0, 0);
    return cz.leaf_count;
}

bool is_isomorphic(const Family& a, const Family& b) {
    if (a.edges.size() != b.edges.size() || a.k != b.k) return false;
    if (popcount(support(a)) != popcount(support(b))) return false;
    auto degree_multiset = [](const Family& f) {
        std::vector<int> d;
        for (int v : mask_vertices(support(f))) {
            int c = 0;
            for (Mask e : f.edges)
                if (e >> v & 1) ++c;
            d.push_back(c);
        }
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degree_multiset(a) != degree_multiset(b)) return false;
    return canonical_form(a) == canonical_form(b);
}

bool is_min_word(const std::vector<Mask>& word, int s) {
    if (s == 0) return true;
    if (!std::is_sorted(word.begin(), word.end())) throw std::invalid_argument("is_min_word: word must be sorted");
    Canonizer cz(word, s);
    cz.best = word;
    cz.reset();
    return !cz.find_smaller(0, 0);
}

} // namespace divlab
