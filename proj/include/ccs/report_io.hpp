#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "ccs/invariants.hpp"
#include "ccs/theorem_lab.hpp"

namespace ccs {

// Schema version stamped into every machine-readable report.
inline constexpr const char* kSchemaVersion = "1";

nlohmann::json partition_to_json(const PointConfig& config, int k,
                                 const std::optional<KPartition>& partition);
nlohmann::json radon_result_to_json(const RadonResult& result);
nlohmann::json helly_result_to_json(const HellyResult& result);
nlohmann::json profile_to_json(const FractionalHellyProfile& profile);
nlohmann::json audit_row_to_json(const AuditRow& row);
nlohmann::json constants_to_json(const ProofConstants& c);
nlohmann::json growth_probe_to_json(const GrowthProbe& probe);

// Hypergraph file: {"vertices": 12, "s": 3, "edges": [[0,1,2], ...]}
Hypergraph hypergraph_from_json(const nlohmann::json& j);
Hypergraph hypergraph_from_file(const std::string& path);
nlohmann::json hypergraph_to_json(const Hypergraph& h);

// One AuditRow per line (JSON lines).
std::string audit_report_to_jsonl(const AuditReport& report);

// Human-readable audit table.
std::string audit_report_to_table(const AuditReport& report);

}  // namespace ccs
