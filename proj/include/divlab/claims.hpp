#pragma once

// Certified-claim registry behind the `certify` subcommand. Each claim runs
// the relevant searches / scans and reports a self-contained statement with
// its verification scope. Exit codes: 0 certified within scope, 2 a
// counterexample or violation was found, 3 budget exhausted before the scope
// was covered.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace divlab {

struct ClaimOptions {
    int n_max = 0;  // 0 = claim default
    std::uint64_t budget_nodes = 0;
    double budget_seconds = 0;
    int jobs = 0;
    std::uint64_t seed = 12345;
};

struct ClaimResult {
    int exit_code = 0;
    nlohmann::json report;
};

std::vector<std::string> claim_ids();

// Throws std::invalid_argument for an unknown id.
ClaimResult run_claim(const std::string& id, const ClaimOptions& opt);

} // namespace divlab
