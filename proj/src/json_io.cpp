#include "divlab/json_io.hpp"

#include <sstream>

namespace divlab {

using nlohmann::json;

std::vector<int> mask_to_list(Mask m) {
    std::vector<int> out;
    for (int v : mask_vertices(m)) out.push_back(v + 1);
    return out;
}

json family_to_json(const Family& fam) {
    json edges = json::array();
    for (Mask e : fam.edges) edges.push_back(mask_to_list(e));
    return json{{"n", fam.n}, {"k", fam.k}, {"edges", std::move(edges)}};
}

namespace {

std::string list_to_string(const json& j) {
    std::ostringstream os;
    os << j;
    return os.str();
}

} // namespace

Family family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("edges"))
        throw std::invalid_argument("family JSON needs the fields n, k and edges");
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    if (!j.at("edges").is_array()) throw std::invalid_argument("family JSON: edges must be an array");
    std::vector<Mask> edges;
    for (const json& je : j.at("edges")) {
        if (!je.is_array()) throw std::invalid_argument("family JSON: edge " + list_to_string(je) + " is not an array");
        Mask m = 0;
        for (const json& jv : je) {
            if (!jv.is_number_integer())
                throw std::invalid_argument("family JSON: edge " + list_to_string(je) + " has a non-integer vertex");
            const long v = jv.get<long>();
            if (v < 1 || v > n)
                throw std::invalid_argument("family JSON: edge " + list_to_string(je) + " has vertex " +
                                            std::to_string(v) + " outside [1," + std::to_string(n) + "]");
            if (m >> (v - 1) & 1)
                throw std::invalid_argument("family JSON: edge " + list_to_string(je) + " repeats vertex " +
                                            std::to_string(v));
            m |= Mask{1} << (v - 1);
        }
        edges.push_back(m);
    }
    return Family::make(n, k, std::move(edges));
}

json generated_to_json(const GeneratedFamily& gf) {
    json gens = json::array();
    for (Mask g : gf.generators) gens.push_back(mask_to_list(g));
    return json{{"n", gf.n}, {"k", gf.k}, {"generators", std::move(gens)}};
}

GeneratedFamily generated_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("generators"))
        throw std::invalid_argument("generated-family JSON needs the fields n, k and generators");
    const long n = j.at("n").get<long>();
    const int k = j.at("k").get<int>();
    std::vector<Mask> gens;
    int ss = 0;
    for (const json& je : j.at("generators")) {
        Mask m = 0;
        for (const json& jv : je) {
            const long v = jv.get<long>();
            if (v < 1 || v > 64)
                throw std::invalid_argument("generated-family JSON: generator " + list_to_string(je) +
                                            " has vertex " + std::to_string(v) + " outside [1,64]");
            m |= Mask{1} << (v - 1);
            ss = std::max(ss, static_cast<int>(v));
        }
        gens.push_back(m);
    }
    return generated(std::move(gens), ss, n, k);
}

json stats_to_json(const Family& fam, const FamilyStats& st, bool saturation_known) {
    json delta = json::object(), gamma = json::object();
    for (std::size_t l = 0; l < st.delta.size(); ++l) delta[std::to_string(l)] = st.delta[l];
    for (std::size_t l = 0; l < st.gamma.size(); ++l) gamma[std::to_string(l)] = st.gamma[l];
    json basis_sets = json::array();
    for (Mask b : st.basis_sets) basis_sets.push_back(mask_to_list(b));
    json out{{"n", fam.n},
             {"k", fam.k},
             {"size", st.size},
             {"delta", std::move(delta)},
             {"gamma", std::move(gamma)},
             {"tau", st.tau},
             {"tau_witness", mask_to_list(st.tau_witness)},
             {"nu", st.nu},
             {"intersecting", st.intersecting},
             {"basis", std::move(basis_sets)}};
    if (saturation_known)
        out["saturated"] = st.saturated;
    else
        out["saturated"] = nullptr;
    return out;
}

json report_to_json(const SearchReport& rep) {
    json wits = json::array();
    for (const CanonicalForm& f : rep.witnesses) wits.push_back(f.hex());
    return json{{"optimum", std::to_string(rep.optimum)},
                {"witnesses", std::move(wits)},
                {"nodes_explored", rep.nodes_explored},
                {"scope_n_max", rep.scope_n_max},
                {"exhausted", rep.exhausted},
                {"note", rep.note}};
}

json certificate_to_json(const BranchingCertificate& cert) {
    json per_level = json::object();
    for (const auto& [j2, c] : cert.per_level) per_level[std::to_string(j2)] = c;
    return json{{"rule", cert.rule},
                {"ell", cert.ell},
                {"t", cert.t},
                {"r", cert.r},
                {"case", cert.u_case == '1' ? "i" : cert.u_case == '2' ? "ii" : "pair"},
                {"u", mask_to_list(cert.u)},
                {"per_level", std::move(per_level)},
                {"weighted_sum", cert.weighted_sum.get_str()},
                {"bound", cert.bound.get_str()},
                {"holds", cert.holds},
                {"applicable", cert.applicable},
                {"note", cert.note}};
}

json branching33_to_json(const Branching33Report& rep) {
    json certs = json::array();
    for (const BranchingCertificate& c : rep.certs) certs.push_back(certificate_to_json(c));
    return json{{"applicable", rep.applicable}, {"holds", rep.holds}, {"note", rep.note}, {"pair_certificates", certs}};
}

json trace_to_json(const BranchTrace& tr) {
    json lens = json::object();
    for (const auto& [l, c] : tr.survivors_per_length) lens[std::to_string(l)] = c;
    return json{{"ran", tr.ran},
                {"note", tr.note},
                {"u", mask_to_list(tr.sel.u)},
                {"case", tr.sel.u_case == '1' ? "i" : "ii"},
                {"r", tr.sel.r},
                {"t", tr.sel.t},
                {"survivors_per_length", std::move(lens)},
                {"total_weight", tr.total_weight.get_str()},
                {"weight_at_most_one", tr.weight_at_most_one},
                {"covers_basis_restriction", tr.covers_basis_restriction},
                {"per_sequence_weight_ok", tr.per_sequence_weight_ok}};
}

} // namespace divlab
