#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "horobound/boundary.hpp"
#include "horobound/builtin.hpp"

namespace horobound {

inline constexpr int kSchemaVersion = 1;

/// What to run: a graph descriptor (builtin name or file), an operation and
/// its parameters. Vertices are given as words (groups) or labels (graphs).
struct ScenarioSpec {
  std::string graph;
  std::string operation;
  nlohmann::json params = nlohmann::json::object();
  unsigned workers = 1;
  bool timestamp = false;
};

/// Operations accepted by run_scenario.
const std::vector<std::string>& scenario_operations();

/// Checks the operation name and parameter types; throws InvalidInput.
void validate(const ScenarioSpec& spec);

/// Runs the scenario and returns the full report document.
nlohmann::json run_scenario(const ScenarioSpec& spec, const Limits& limits = {});

struct ReportVerification {
  bool ok = false;
  bool payload_identical = false;
  std::string message;
};

/// Rebuilds the graph, re-runs the recorded scenario, compares payload bytes
/// and re-checks certificates through the definitional predicates.
ReportVerification verify_report(const nlohmann::json& report, const Limits& limits = {}, unsigned workers = 1);

/// Perimeter tables as CSV (rigid-scan, witness, tail-bound, pathsjoin).
std::string report_csv(const nlohmann::json& report);

// Serialization of individual records; vertices carry a hex key and a label.
nlohmann::json to_json(const VertexRef& v);
VertexRef vertex_from_json(const NeighborOracle& oracle, const nlohmann::json& j);
nlohmann::json to_json(const TripleRecord& t);
TripleRecord triple_from_json(const NeighborOracle& oracle, const nlohmann::json& j);
nlohmann::json to_json(const NonBusemannCertificate& cert);
NonBusemannCertificate certificate_from_json(const NeighborOracle& oracle, const nlohmann::json& j);
nlohmann::json to_json(const TailBoundRecord& rec);
TailBoundRecord tail_bound_from_json(const NeighborOracle& oracle, const nlohmann::json& j);

/// Default scan center: the identity for groups, (1,0) for the ladders.
VertexRef default_center(const Builtin& b);

}  // namespace horobound
