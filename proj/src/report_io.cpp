#include "ccs/report_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ccs {

using nlohmann::json;

json partition_to_json(const PointConfig& config, int k,
                       const std::optional<KPartition>& partition) {
    json cfg = json::object();
    for (const auto& [point, mult] : config.multiplicities()) cfg[std::to_string(point)] = mult;
    json j{{"schema", kSchemaVersion}, {"config", cfg}, {"k", k}};
    if (partition) {
        j["partition"] = partition->parts;
        j["common_point"] = partition->common_point;
    } else {
        j["partition"] = nullptr;
        j["common_point"] = nullptr;
    }
    return j;
}

json radon_result_to_json(const RadonResult& result) {
    json j{{"schema", kSchemaVersion},
           {"k", result.k},
           {"mode", radon_mode_name(result.mode)},
           {"searched_up_to", result.searched_up_to},
           {"exhaustive", result.exhaustive}};
    j["value"] = result.value ? json(*result.value) : json(nullptr);
    if (result.lower_witness) {
        json cfg = json::object();
        for (const auto& [point, mult] : result.lower_witness->multiplicities())
            cfg[std::to_string(point)] = mult;
        j["lower_witness"] = cfg;
    } else {
        j["lower_witness"] = nullptr;
    }
    return j;
}

json helly_result_to_json(const HellyResult& result) {
    json witness = json::array();
    for (Mask m : result.witness) witness.push_back(mask_to_indices(m));
    return json{{"schema", kSchemaVersion},
                {"value", result.value ? json(*result.value) : json(nullptr)},
                {"witness", witness},
                {"searched_up_to", result.searched_up_to},
                {"exact", result.exact}};
}

json profile_to_json(const FractionalHellyProfile& profile) {
    return json{{"schema", kSchemaVersion},
                {"f", profile.f},
                {"family_size", profile.family_size},
                {"alpha_observed", rat_to_string(profile.alpha_observed)},
                {"beta_best", rat_to_string(profile.beta_best)},
                {"best_point", profile.best_point}};
}

json audit_row_to_json(const AuditRow& row) {
    json values = json::object();
    for (const auto& [name, value] : row.values) values[name] = value;
    return json{{"schema", kSchemaVersion},
                {"name", row.name},
                {"statement", row.statement},
                {"values", values},
                {"applicable", row.applicable},
                {"pass", row.pass}};
}

json constants_to_json(const ProofConstants& c) {
    json rows = json::array();
    for (const auto& row : c.derivation) rows.push_back(audit_row_to_json(row));
    return json{{"schema", kSchemaVersion},
                {"r_f", c.r_f.str()},
                {"f", c.f.str()},
                {"k", c.k.str()},
                {"alpha_s", rat_to_string(c.alpha_s)},
                {"alpha_t", rat_to_string(c.alpha_t)},
                {"alpha", rat_to_string(c.alpha())},
                {"beta", rat_to_string(c.beta)},
                {"s", c.s.str()},
                {"t", c.t.str()},
                {"m", c.m.str()},
                {"derivation", rows}};
}

json growth_probe_to_json(const GrowthProbe& probe) {
    json values = json::object();
    for (const auto& [k, rk] : probe.r_values) values[std::to_string(k)] = rk;
    json ratios = json::object();
    for (const auto& [k, ratio] : probe.ratios) ratios[std::to_string(k)] = rat_to_string(ratio);
    return json{{"schema", kSchemaVersion},
                {"r_exists", probe.r_exists},
                {"r_values", values},
                {"ratios", ratios},
                {"max_ratio", probe.max_ratio ? json(rat_to_string(*probe.max_ratio)) : json(nullptr)},
                {"verdict", probe.verdict}};
}

Hypergraph hypergraph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("s") || !j.contains("edges"))
        throw input_error("hypergraph file needs 'vertices', 's' and 'edges'");
    Hypergraph h;
    h.vertices = j["vertices"].get<int>();
    h.uniformity = j["s"].get<int>();
    for (const auto& edge : j["edges"]) {
        Mask m = 0;
        for (const auto& v : edge) {
            int idx = v.get<int>();
            if (idx < 0 || idx >= h.vertices) throw input_error("hypergraph edge vertex out of range");
            m |= Mask{1} << idx;
        }
        h.edges.push_back(m);
    }
    h.check();
    return h;
}

Hypergraph hypergraph_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open hypergraph file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error("malformed hypergraph file " + path + ": " + e.what());
    }
    return hypergraph_from_json(j);
}

json hypergraph_to_json(const Hypergraph& h) {
    json edges = json::array();
    for (Mask e : h.edges) edges.push_back(mask_to_indices(e));
    return json{{"vertices", h.vertices}, {"s", h.uniformity}, {"edges", edges}};
}

std::string audit_report_to_jsonl(const AuditReport& report) {
    std::ostringstream os;
    for (const auto& row : report.rows) os << audit_row_to_json(row).dump() << '\n';
    return os.str();
}

std::string audit_report_to_table(const AuditReport& report) {
    std::ostringstream os;
    for (const auto& row : report.rows) {
        os << (row.applicable ? (row.pass ? "PASS " : "FAIL ") : "info ") << row.name << "  "
           << row.statement;
        for (const auto& [name, value] : row.values) os << "  " << name << "=" << value;
        os << '\n';
    }
    return os.str();
}

}  // namespace ccs
