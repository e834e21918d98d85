#pragma once

// Pruned isomorph-free exhaustive generation of intersecting k-families on a
// bounded ground set. States are edge lists in increasing mask order with
// contiguous support labels; a state is expanded only if its word is the
// canonical representative of its isomorphism class, so every class is
// visited exactly once. Subtrees below a frontier depth run as independent
// OpenMP tasks; reports merge deterministically.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "divlab/canon.hpp"
#include "divlab/family.hpp"

namespace divlab {

enum class SearchMode {
    MaxGamma,        // maximize gamma_ell subject to tau >= tau_min
    Counterexample,  // find any family with gamma_ell >= gamma_min and tau >= tau_min
    Classify,        // 3-uniform classification counterexample search
};

struct SearchTask {
    int k = 3;
    int ell = 2;
    int n_max = 8;
    int tau_min = 0;
    std::uint64_t gamma_min = 0;    // threshold for Counterexample mode
    SearchMode mode = SearchMode::MaxGamma;
    std::uint64_t seed_gamma = 0;   // known-attainable diversity, used to warm-start pruning
    std::uint64_t budget_nodes = 0; // 0 = unlimited
    int jobs = 0;                   // 0 = all hardware threads
    int frontier_depth = 2;
};

struct SearchReport {
    std::uint64_t optimum = 0;
    std::vector<CanonicalForm> witnesses;  // sorted, duplicate-free
    std::uint64_t nodes_explored = 0;
    int scope_n_max = 0;
    bool exhausted = false;
    std::string note;
};

SearchReport run_search(const SearchTask& task);

// Bare enumeration of every canonical intersecting k-family on at most n_max
// vertices (including the empty one); `visit` may return false to prune the
// subtree below a state. Serial. Exposed for oracle tests.
void enumerate_canonical_intersecting(int k, int n_max,
                                      const std::function<bool(const std::vector<Mask>&, int)>& visit);

// Counterexample search behind the 3-uniform classification claim: a
// nonempty intersecting 3-family, not isomorphic to either known extremal
// family, in which every pair inside an edge is avoided by >= 2 edges.
// Empty witness list = classification verified up to n_max.
SearchReport classify_triples(int n_max, std::uint64_t budget_nodes = 0, int jobs = 0);

// Counterexample search for a 4-uniform intersecting family with covering
// number 4 and triple diversity >= 4. For n_max <= 8 the scan reduces to
// maximal families (diversity and covering number only grow when edges are
// added, so a counterexample saturates to a maximal one); beyond 8 the
// generic engine runs with an honest exhausted flag.
SearchReport certify_quad_triple_diversity(int n_max, std::uint64_t budget_nodes = 0, int jobs = 0);

} // namespace divlab
