#pragma once

// JSON views of the domain types. Families use 1-based vertex lists on the
// wire; counts that may exceed 64 bits travel as decimal strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "divlab/branching.hpp"
#include "divlab/constructions.hpp"
#include "divlab/family.hpp"
#include "divlab/search.hpp"

namespace divlab {

std::vector<int> mask_to_list(Mask m);  // 1-based vertices

nlohmann::json family_to_json(const Family& fam);

// Accepts {"n":int,"k":int,"edges":[[int,...],...]}; sorts, deduplicates and
// validates. Throws std::invalid_argument naming the offending edge.
Family family_from_json(const nlohmann::json& j);

nlohmann::json generated_to_json(const GeneratedFamily& gf);
GeneratedFamily generated_from_json(const nlohmann::json& j);

nlohmann::json stats_to_json(const Family& fam, const FamilyStats& st, bool saturation_known = true);

nlohmann::json report_to_json(const SearchReport& rep);

nlohmann::json certificate_to_json(const BranchingCertificate& cert);
nlohmann::json branching33_to_json(const Branching33Report& rep);
nlohmann::json trace_to_json(const BranchTrace& tr);

} // namespace divlab
