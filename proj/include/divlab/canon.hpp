#pragma once

// Canonical labeling of set families up to support relabeling. The canonical
// form is the lexicographically minimal sorted edge-mask sequence over all
// bijections of the support onto {0,..,s-1}; two families are isomorphic iff
// their forms are equal. Isolated vertices are ignored by design.

#include <cstdint>
#include <string>
#include <vector>

#include "divlab/family.hpp"

namespace divlab {

struct CanonicalForm {
    int support_size = 0;
    int k = 0;
    std::vector<Mask> word;

    std::string hex() const;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.support_size == b.support_size && a.k == b.k && a.word == b.word;
    }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        if (a.support_size != b.support_size) return a.support_size < b.support_size;
        if (a.k != b.k) return a.k < b.k;
        return a.word < b.word;
    }
};

CanonicalForm canonical_form(const Family& fam);

// Number of support permutations mapping the family onto itself.
std::uint64_t automorphism_count(const Family& fam);

// Fast invariant prefilter, then canonical form comparison.
bool is_isomorphic(const Family& a, const Family& b);

// True iff `word` (sorted masks with support exactly {0,..,s-1}) is already
// the canonical word of its class. Used by the orderly search to accept a
// state only at its canonical representative.
bool is_min_word(const std::vector<Mask>& word, int s);

} // namespace divlab
