// divlab: exact workbench for intersecting uniform set families.
// Subcommands: analyze, construct, search, certify, bound, branching.
// Reports go to stdout as JSON; human-readable logging goes to stderr.
// Exit codes: 0 ok/certified, 1 usage or input error, 2 counterexample or
// violation found, 3 budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "divlab/claims.hpp"
#include "divlab/counting.hpp"
#include "divlab/json_io.hpp"
#include "divlab/search.hpp"
#include "divlab/serial_ref.hpp"

using nlohmann::json;
using namespace divlab;

namespace {

json read_json_input(const std::string& path) {
    if (path.empty() || path == "-") {
        json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

int jobs_from(int cli_jobs) {
    if (cli_jobs > 0) return cli_jobs;
    if (const char* env = std::getenv("DIVLAB_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;  // all hardware threads
}

Family construct_named(const std::string& name, int k_param) {
    if (name == "fano") return fano();
    if (name == "t0") return t0();
    if (name == "l3") return l3();
    if (name == "triangle") return triangle();
    if (name == "parity-quads") return parity_quads();
    if (name == "grid-quads") return grid_quads();
    if (name == "pentagon-quads") return pentagon_quads();
    if (name == "pentagon-product") return pentagon_cycle_product();
    if (name == "t0-triangle") return t0_triangle();
    if (name == "ekr-triangle") return ekr_triangle(k_param > 0 ? k_param : 3);
    throw std::invalid_argument("unknown construction: " + name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for intersecting uniform set families"};
    app.require_subcommand(1);

    int jobs = 0;
    std::uint64_t seed = 12345;
    app.add_option("--jobs", jobs, "worker threads (default: all; env DIVLAB_JOBS)");
    app.add_option("--seed", seed, "seed for randomized corpora");

    // analyze
    auto* an = app.add_subcommand("analyze", "full stats of a family JSON (path or stdin)");
    std::string an_path;
    an->add_option("path", an_path, "family JSON file, - for stdin");

    // construct
    auto* co = app.add_subcommand("construct", "emit a named construction as family JSON");
    std::string co_name;
    int co_k = 0;
    long co_n = 0;
    std::string co_base, co_a, co_b;
    co->add_option("name", co_name,
                   "fano|t0|l3|triangle|parity-quads|grid-quads|pentagon-quads|pentagon-product|t0-triangle|"
                   "ekr-triangle|generated|wreath")
        ->required();
    co->add_option("--k", co_k, "uniformity (ekr-triangle, generated)");
    co->add_option("--n", co_n, "ground set size (generated)");
    co->add_option("--base", co_base, "generator family name (generated)");
    co->add_option("--a", co_a, "left factor name (wreath)");
    co->add_option("--b", co_b, "right factor name (wreath)");

    // search
    auto* se = app.add_subcommand("search", "pruned isomorph-free search over intersecting families");
    SearchTask task;
    std::string mode = "max-gamma";
    se->add_option("--k", task.k, "uniformity")->required();
    se->add_option("--ell", task.ell, "diversity level")->required();
    se->add_option("--n-max", task.n_max, "ground set cap");
    se->add_option("--tau-min", task.tau_min, "covering number lower bound");
    se->add_option("--gamma-min", task.gamma_min, "diversity threshold (counterexample mode)");
    se->add_option("--mode", mode, "max-gamma|counterexample|classify");
    se->add_option("--budget-nodes", task.budget_nodes, "node budget (0 = unlimited)");
    se->add_option("--frontier-depth", task.frontier_depth, "depth below which subtrees run in parallel");

    // certify
    auto* ce = app.add_subcommand("certify", "run a registered claim certificate");
    std::string claim;
    ClaimOptions copt;
    ce->add_option("claim", claim, "one of: m2-3 m1-3 lemma-3-1 m3-4 wreath-tau key-inequalities prop-5-5-min lower-bounds-s5")
        ->required();
    ce->add_option("--n-max", copt.n_max, "override the claim's scope");
    ce->add_option("--budget-nodes", copt.budget_nodes, "node budget (0 = unlimited)");
    ce->add_option("--budget-seconds", copt.budget_seconds, "wall-clock budget (0 = unlimited)");

    // bound
    auto* bo = app.add_subcommand("bound", "evaluate a closed-form bound exactly");
    std::string bound_name;
    BoundSpec bspec;
    bo->add_option("name", bound_name, "main|reduced|case1|triple|top|diversity")->required();
    bo->add_option("--ell", bspec.ell, "diversity level");
    bo->add_option("--k", bspec.k, "uniformity")->required();
    bo->add_option("--n", bspec.n, "ground set size");
    bo->add_option("--m", bspec.m_value, "the constant m_ell(ell+1) to plug in");

    // branching
    auto* br = app.add_subcommand("branching", "weighted basis-expansion certificate for a saturated family");
    std::string br_path, br_lemma = "2.2";
    int br_ell = 2;
    bool br_trace = false;
    br->add_option("path", br_path, "family JSON file, - for stdin");
    br->add_option("--ell", br_ell, "diversity level (rule 2.2)");
    br->add_option("--lemma", br_lemma, "rule variant: 2.2 (general) or 3.3 (covering number 4, pair form)");
    br->add_flag("--debug-trace", br_trace, "also replay the weighted sequence process");

    CLI11_PARSE(app, argc, argv);
    task.jobs = copt.jobs = jobs_from(jobs);
    copt.seed = seed;

    try {
        if (*an) {
            const Family fam = family_from_json(read_json_input(an_path));
            bool sat_known = true;
            FamilyStats st;
            try {
                st = analyze(fam);
            } catch (const std::invalid_argument&) {
                st = analyze(fam, false);
                sat_known = false;
            }
            std::cout << stats_to_json(fam, st, sat_known).dump(2) << "\n";
            return 0;
        }
        if (*co) {
            if (co_name == "generated") {
                if (co_base.empty() || co_n <= 0 || co_k <= 0)
                    throw std::invalid_argument("construct generated needs --base, --n and --k");
                const GeneratedFamily gf = generated(construct_named(co_base, 0), co_n, co_k);
                std::cout << generated_to_json(gf).dump(2) << "\n";
            } else if (co_name == "wreath") {
                if (co_a.empty() || co_b.empty()) throw std::invalid_argument("construct wreath needs --a and --b");
                std::cout << family_to_json(wreath(construct_named(co_a, 0), construct_named(co_b, 0))).dump(2) << "\n";
            } else {
                std::cout << family_to_json(construct_named(co_name, co_k)).dump(2) << "\n";
            }
            return 0;
        }
        if (*se) {
            if (mode == "max-gamma")
                task.mode = SearchMode::MaxGamma;
            else if (mode == "counterexample")
                task.mode = SearchMode::Counterexample;
            else if (mode == "classify")
                task.mode = SearchMode::Classify;
            else
                throw std::invalid_argument("unknown search mode: " + mode);
            const SearchReport rep = run_search(task);
            std::cout << report_to_json(rep).dump(2) << "\n";
            if (!rep.exhausted) return 3;
            if (task.mode != SearchMode::MaxGamma && !rep.witnesses.empty()) return 2;
            return 0;
        }
        if (*ce) {
            const ClaimResult res = run_claim(claim, copt);
            std::cout << res.report.dump(2) << "\n";
            return res.exit_code;
        }
        if (*bo) {
            json params{{"ell", bspec.ell}, {"k", bspec.k}, {"n", bspec.n}, {"m", bspec.m_value}};
            BigInt value;
            if (bound_name == "main" || bound_name == "reduced" || bound_name == "case1") {
                const ThmBounds tb = theorem_bounds(bspec);
                value = bound_name == "main" ? tb.main : bound_name == "reduced" ? tb.reduced : tb.case1;
                params["hypothesis_met"] = tb.hypothesis_met;
            } else if (bound_name == "triple") {
                value = triple_diversity_bound(bspec.n, bspec.k);
            } else if (bound_name == "top") {
                value = top_diversity_bound(bspec.ell);
            } else if (bound_name == "diversity") {
                value = diversity_bound(bspec.n, bspec.k);
            } else {
                throw std::invalid_argument("unknown bound name: " + bound_name);
            }
            std::cout << json{{"bound_name", bound_name}, {"parameters", params}, {"value", value.get_str()}}.dump(2)
                      << "\n";
            return 0;
        }
        if (*br) {
            const Family fam = family_from_json(read_json_input(br_path));
            json out;
            bool ok;
            if (br_lemma == "3.3") {
                const Branching33Report rep = verify_branching_33(fam);
                out = branching33_to_json(rep);
                ok = !rep.applicable || rep.holds;
            } else if (br_lemma == "2.2") {
                const BranchingCertificate cert = verify_branching(fam, br_ell);
                out = certificate_to_json(cert);
                ok = !cert.applicable || cert.holds;
                if (br_trace && cert.applicable) out["trace"] = trace_to_json(simulate_branching(fam, br_ell));
            } else {
                throw std::invalid_argument("unknown rule variant: " + br_lemma);
            }
            std::cout << out.dump(2) << "\n";
            return ok ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
