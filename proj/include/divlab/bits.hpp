#pragma once

// Mask / subset helpers shared across the library. Vertices are bit
// positions 0..n-1 of a 64-bit word; a set family is a vector of masks.

#include <bit>
#include <cstdint>
#include <vector>

namespace divlab {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline std::vector<int> mask_vertices(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline Mask vertices_mask(const std::vector<int>& vs) {
    Mask m = 0;
    for (int v : vs) m |= Mask{1} << v;
    return m;
}

// Next mask with the same popcount, in increasing numeric order (Gosper).
inline Mask next_same_popcount(Mask v) {
    Mask c = v & (~v + 1);
    Mask r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

// C(n,r) saturating at u64 max; enough for enumeration budgets.
inline std::uint64_t binom_u64(long n, long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (long i = 1; i <= r; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - r + i) / static_cast<unsigned __int128>(i);
        if (acc > ~std::uint64_t{0}) return ~std::uint64_t{0};
    }
    return static_cast<std::uint64_t>(acc);
}

// k-subset of [0,64) with the given colex rank; Gosper enumerates ranks in order.
inline Mask mask_from_colex_rank(std::uint64_t rank, int k) {
    Mask m = 0;
    for (int i = k; i >= 1; --i) {
        long c = 63;
        while (binom_u64(c, i) > rank) --c;
        rank -= binom_u64(c, i);
        m |= Mask{1} << c;
    }
    return m;
}

// Lexicographic r-combinations of {0,...,n-1}. Yields index arrays in the
// order (0,1,..,r-1), (0,1,..,r), ...; lex order of the sorted tuples.
class Combinations {
public:
    Combinations(int n, int r) : n_(n), r_(r), idx_(static_cast<size_t>(std::max(r, 0))), done_(r > n || r < 0) {
        for (int i = 0; i < r; ++i) idx_[static_cast<size_t>(i)] = i;
    }
    bool done() const { return done_; }
    const std::vector<int>& indices() const { return idx_; }
    void next() {
        if (r_ == 0) { done_ = true; return; }
        int i = r_ - 1;
        while (i >= 0 && idx_[static_cast<size_t>(i)] == n_ - r_ + i) --i;
        if (i < 0) { done_ = true; return; }
        ++idx_[static_cast<size_t>(i)];
        for (int j = i + 1; j < r_; ++j) idx_[static_cast<size_t>(j)] = idx_[static_cast<size_t>(j - 1)] + 1;
    }

private:
    int n_, r_;
    std::vector<int> idx_;
    bool done_;
};

} // namespace divlab
