#include "divlab/claims.hpp"

#include <chrono>
#include <omp.h>
#include <random>
#include <stdexcept>

#include "divlab/canon.hpp"
#include "divlab/counting.hpp"
#include "divlab/json_io.hpp"
#include "divlab/search.hpp"

namespace divlab {

using nlohmann::json;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json search_claim_report(const std::string& id, const std::string& statement, const SearchReport& rep) {
    json out = report_to_json(rep);
    out["claim"] = id;
    out["statement"] = statement;
    return out;
}

int exit_code_for(const SearchReport& rep, bool certified) {
    if (!rep.exhausted && rep.witnesses.empty()) return 3;
    return certified ? 0 : 2;
}

ClaimResult claim_m2_3(const ClaimOptions& opt) {
    const int n_max = opt.n_max ? opt.n_max : 8;
    SearchTask task;
    task.k = 3;
    task.ell = 2;
    task.tau_min = 3;
    task.n_max = n_max;
    task.mode = SearchMode::MaxGamma;
    task.seed_gamma = 2;  // attained by both known extremal families
    task.budget_nodes = opt.budget_nodes;
    task.jobs = opt.jobs;
    SearchReport rep = run_search(task);
    std::vector<CanonicalForm> expected{canonical_form(fano()), canonical_form(t0())};
    std::sort(expected.begin(), expected.end());
    const bool certified = rep.exhausted && rep.optimum == 2 && rep.witnesses == expected;
    json out = search_claim_report(
        "m2-3",
        "on at most " + std::to_string(n_max) +
            " vertices, every intersecting 3-uniform family with covering number 3 has double diversity at most 2, "
            "with equality exactly for the two known 7-line and 10-triple families",
        rep);
    out["certified"] = certified;
    return {exit_code_for(rep, certified), std::move(out)};
}

ClaimResult claim_m1_3(const ClaimOptions& opt) {
    const int n_max = opt.n_max ? opt.n_max : 8;
    SearchTask task;
    task.k = 3;
    task.ell = 1;
    task.tau_min = 3;
    task.n_max = n_max;
    task.mode = SearchMode::MaxGamma;
    task.seed_gamma = 5;
    task.budget_nodes = opt.budget_nodes;
    task.jobs = opt.jobs;
    SearchReport rep = run_search(task);
    const std::vector<CanonicalForm> expected{canonical_form(t0())};
    const bool certified = rep.exhausted && rep.optimum == 5 && rep.witnesses == expected;
    json out = search_claim_report(
        "m1-3",
        "on at most " + std::to_string(n_max) +
            " vertices, every intersecting 3-uniform family with covering number 3 has diversity at most 5, with "
            "equality only for the 10-triple family",
        rep);
    out["certified"] = certified;
    return {exit_code_for(rep, certified), std::move(out)};
}

ClaimResult claim_lemma_3_1(const ClaimOptions& opt) {
    const int n_max = opt.n_max ? opt.n_max : 8;
    SearchReport rep = classify_triples(n_max, opt.budget_nodes, opt.jobs);
    const bool certified = rep.exhausted && rep.witnesses.empty();
    json out = search_claim_report(
        "lemma-3-1",
        "on at most " + std::to_string(n_max) +
            " vertices, every nonempty intersecting 3-uniform family is isomorphic to one of the two extremal "
            "families or has a pair inside an edge avoided by at most one edge",
        rep);
    out["certified"] = certified;
    return {exit_code_for(rep, certified), std::move(out)};
}

ClaimResult claim_m3_4(const ClaimOptions& opt) {
    const int n_max = opt.n_max ? opt.n_max : 8;
    json examples = json::array();
    bool examples_ok = true;
    const std::pair<const char*, Family> cases[] = {
        {"plane-order-3", l3()},
        {"parity-quads", parity_quads()},
        {"grid-quads", grid_quads()},
        {"pentagon-quads", pentagon_quads()},
    };
    for (const auto& [name, fam] : cases) {
        const std::uint64_t g3 = diversity(fam, 3);
        const int tau = covering_number(fam).size;
        const bool ok = g3 == 3 && tau == 4 && is_intersecting(fam);
        examples_ok = examples_ok && ok;
        examples.push_back(json{{"family", name}, {"gamma3", g3}, {"tau", tau}, {"ok", ok}});
    }
    SearchReport rep = certify_quad_triple_diversity(n_max, opt.budget_nodes, opt.jobs);
    const bool search_clean = rep.exhausted && rep.witnesses.empty();
    json out = search_claim_report(
        "m3-4",
        "every intersecting 4-uniform family with covering number 4 on at most " + std::to_string(n_max) +
            " vertices has triple diversity at most 3; the four named witnesses attain 3",
        rep);
    out["example_verifications"] = std::move(examples);
    out["examples_ok"] = examples_ok;
    out["certified"] = examples_ok && search_clean;
    if (!rep.exhausted && rep.witnesses.empty())
        out["note"] = std::string(out["note"].get<std::string>()) +
                      "; budget exhausted: only the example verifications are certified";
    int code = 0;
    if (!examples_ok || !rep.witnesses.empty())
        code = 2;
    else if (!rep.exhausted)
        code = 3;
    return {code, std::move(out)};
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
        if (ok && std::uniform_int_distribution<int>(0, 2)(rng) != 0) chosen.push_back(e);
    }
    if (chosen.empty()) chosen.push_back(all.front());
    return Family::make(n, k, std::move(chosen));
}

ClaimResult claim_wreath_tau(const ClaimOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    json trials = json::array();
    bool all_ok = true;
    for (int trial = 0; trial < 50; ++trial) {
        const int na = std::uniform_int_distribution<int>(3, 5)(rng);
        const int ka = std::uniform_int_distribution<int>(2, 3)(rng);
        const int nb = std::uniform_int_distribution<int>(2, 4)(rng);
        const int kb = std::uniform_int_distribution<int>(1, 2)(rng);
        if (ka > na || kb > nb || na * nb > 64) {
            --trial;
            continue;
        }
        const Family a = random_intersecting(rng, na, ka, 6);
        const Family b = random_intersecting(rng, nb, kb, 4);
        std::uint64_t expected_size = b.size();
        for (int i = 0; i < kb; ++i) expected_size *= a.size();
        const Family w = wreath(a, b);
        const int ta = covering_number(a).size, tb = covering_number(b).size, tw = covering_number(w).size;
        const bool ok = is_intersecting(w) && tw == ta * tb && w.size() == expected_size;
        all_ok = all_ok && ok;
        trials.push_back(json{{"a", family_to_json(a)},
                              {"b", family_to_json(b)},
                              {"tau_a", ta},
                              {"tau_b", tb},
                              {"tau_wreath", tw},
                              {"size", w.size()},
                              {"ok", ok}});
    }
    json out{{"claim", "wreath-tau"},
             {"statement", "for intersecting a and b, the wreath product is intersecting with covering number "
                           "tau(a)*tau(b) and size |a|^(k_b) * |b|"},
             {"trials", 50},
             {"seed", opt.seed},
             {"certified", all_ok}};
    if (!all_ok) out["failures"] = std::move(trials);
    return {all_ok ? 0 : 2, std::move(out)};
}

ClaimResult claim_key_inequalities(const ClaimOptions&) {
    bool key3_ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : key3_ok)
    for (long k = 3; k <= 200; ++k) {
        bool local = true;
        for (long p = k; p <= 200; ++p)
            for (long q = p; q <= 200; ++q)
                if (!check_key3(p, q, k)) local = false;
        key3_ok = key3_ok && local;
    }
    bool key4_ok = true;
    int key4_checked = 0;
    for (long k = 24; k <= 300; ++k) {
        const std::optional<bool> r = check_key4(k);
        if (!r.has_value()) continue;
        ++key4_checked;
        if (!*r) key4_ok = false;
    }
    const bool certified = key3_ok && key4_ok;
    json out{{"claim", "key-inequalities"},
             {"statement", "C(p,k)C(q,k) > C(p-1,k)C(q+1,k) for all 3 <= k <= p <= q <= 200, and "
                           "C((4k+1)/3,k)C((4k-5)/3,k) > C(2k-1,k) at every integral k in [24,300]"},
             {"key3_range", "3 <= k <= p <= q <= 200"},
             {"key3_ok", key3_ok},
             {"key4_integral_points", key4_checked},
             {"key4_ok", key4_ok},
             {"certified", certified}};
    return {certified ? 0 : 2, std::move(out)};
}

ClaimResult claim_prop_5_5_min(const ClaimOptions&) {
    bool equality_ok = true;
    for (int k = 6; k <= 23; ++k) {
        const MinF mf = min_f_abc(k);
        if (mf.min != 2 * binom(2 * k - 2, k) + 1) equality_ok = false;
    }
    bool certified_lower_ok = true;
    for (int k = 24; k <= 60; ++k)
        if (!certify_min_f_lower(k)) certified_lower_ok = false;
    json reductions = json::array();
    bool reduction_ok = true;
    for (int k : {2, 3}) {
        const Family f = ekr_triangle(k);
        const std::uint64_t g = diversity(f, 2 * k - 1);
        const MinF mf = min_f_abc(k);
        const bool ok = BigInt(static_cast<unsigned long>(g)) == mf.min;
        reduction_ok = reduction_ok && ok;
        reductions.push_back(json{{"k", k}, {"bruteforce_gamma", g}, {"scan_min", mf.min.get_str()}, {"ok", ok}});
    }
    const bool certified = equality_ok && certified_lower_ok && reduction_ok;
    json out{{"claim", "prop-5-5-min"},
             {"statement", "min of C(a,k)C(b,k)+C(a,k)C(c,k)+C(b,k)C(c,k) over a+b+c=4k-2, 0<=a<=b<=c<=2k-1 equals "
                           "2C(2k-2,k)+1 for 6<=k<=23, is at least that for 24<=k<=60, and matches the brute-force "
                           "diversity of the triangle product for k=2,3"},
             {"equality_6_23", equality_ok},
             {"certified_lower_24_60", certified_lower_ok},
             {"reduction_checks", std::move(reductions)},
             {"certified", certified}};
    return {certified ? 0 : 2, std::move(out)};
}

ClaimResult claim_lower_bounds_s5(const ClaimOptions&) {
    const std::uint64_t g4 = diversity(pentagon_cycle_product(), 4);
    const std::uint64_t g5 = diversity(t0_triangle(), 5);
    bool minf_ok = true;
    for (int k = 6; k <= 23; ++k)
        if (min_f_abc(k).min != 2 * binom(2 * k - 2, k) + 1) minf_ok = false;
    for (int k = 24; k <= 60; ++k)
        if (!certify_min_f_lower(k)) minf_ok = false;
    const bool certified = g4 >= 6 && g5 >= 20 && minf_ok;
    json out{{"claim", "lower-bounds-s5"},
             {"statement", "the pentagon product attains 4-diversity >= 6, the 10-triple wreath triangle attains "
                           "5-diversity >= 20, and the triangle-product minimum is 2C(2k-2,k)+1 for k in [6,23] and "
                           "at least that for k in [24,60]"},
             {"pentagon_gamma4", g4},
             {"t0_triangle_gamma5", g5},
             {"min_f_ok", minf_ok},
             {"certified", certified}};
    return {certified ? 0 : 2, std::move(out)};
}

} // namespace

std::vector<std::string> claim_ids() {
    return {"m2-3",       "m1-3",       "lemma-3-1",      "m3-4",
            "wreath-tau", "key-inequalities", "prop-5-5-min", "lower-bounds-s5"};
}

ClaimResult run_claim(const std::string& id, const ClaimOptions& opt) {
    const auto t0c = std::chrono::steady_clock::now();
    ClaimResult res;
    if (id == "m2-3")
        res = claim_m2_3(opt);
    else if (id == "m1-3")
        res = claim_m1_3(opt);
    else if (id == "lemma-3-1")
        res = claim_lemma_3_1(opt);
    else if (id == "m3-4")
        res = claim_m3_4(opt);
    else if (id == "wreath-tau")
        res = claim_wreath_tau(opt);
    else if (id == "key-inequalities")
        res = claim_key_inequalities(opt);
    else if (id == "prop-5-5-min")
        res = claim_prop_5_5_min(opt);
    else if (id == "lower-bounds-s5")
        res = claim_lower_bounds_s5(opt);
    else
        throw std::invalid_argument("unknown claim id: " + id);
    res.report["runtime_seconds"] = seconds_since(t0c);
    return res;
}

} // namespace divlab
