#include "potent/report.hpp"

#include <json.hpp>

namespace potent {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json graph_node(const LabeledGraph& g) {
  ordered_json node;
  node["n"] = g.vertex_count();
  auto edges = ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  node["edges"] = std::move(edges);
  return node;
}

ordered_json verdict_node(const PotentialVerdict& verdict) {
  ordered_json node;
  node["potential"] = verdict.potential;
  auto violated = ordered_json::array();
  for (const ConditionId& cid : verdict.violated) {
    ordered_json entry;
    entry["theorem"] = std::string(theorem_label(cid.theorem));
    entry["condition"] = cid.condition;
    entry["bindings"] = ordered_json::object();
    for (const auto& [key, value] : cid.bindings) entry["bindings"][key] = value;
    violated.push_back(std::move(entry));
  }
  node["violated"] = std::move(violated);
  return node;
}

ordered_json oracle_node(const DegreeSequence& pi, const TargetPattern& target, OracleMode mode,
                         const OracleResult& result) {
  ordered_json node;
  node["sequence"] = pi.format();
  node["target"] = std::string(target.name());
  node["mode"] = std::string(oracle_mode_name(mode));
  if (result.witness) {
    node["potential"] = true;
    node["graph"] = graph_node(result.witness->graph);
    auto embedding = ordered_json::array();
    for (int pos : result.witness->embedding) embedding.push_back(pos + 1);
    node["embedding"] = std::move(embedding);
  } else {
    node["potential"] = false;
    node["exhausted"] = true;
    node["states_explored"] = result.states_explored;
  }
  return node;
}

}  // namespace

std::string graph_to_json(const LabeledGraph& g) { return graph_node(g).dump(); }

std::string verdict_to_json(const PotentialVerdict& verdict) { return verdict_node(verdict).dump(); }

std::string oracle_to_json(const DegreeSequence& pi, const TargetPattern& target, OracleMode mode,
                           const OracleResult& result) {
  return oracle_node(pi, target, mode, result).dump();
}

std::string sigma_to_json(const SigmaResult& result) {
  ordered_json node;
  node["target"] = std::string(result.target.name());
  node["n"] = result.n;
  node["sigma"] = result.sigma;
  if (result.extremal)
    node["extremal"] = result.extremal->format();
  else
    node["extremal"] = nullptr;
  node["method"] = std::string(sigma_method_name(result.method));
  node["sequences_scanned"] = result.sequences_scanned;
  if (result.degenerate) node["degenerate"] = true;
  return node.dump();
}

std::string report_to_json(const VerificationReport& report) {
  ordered_json node;
  node["target"] = std::string(report.target.name());
  node["n_min"] = report.n_min;
  node["n_max"] = report.n_max;
  node["sequences_tested"] = report.sequences_tested;
  node["agreements"] = report.agreements;
  auto mismatches = ordered_json::array();
  for (const VerifyMismatch& m : report.mismatches) {
    ordered_json entry;
    entry["sequence"] = m.sequence.format();
    entry["predicate_verdict"] = verdict_node(m.predicate_verdict);
    entry["oracle_result"] = oracle_node(m.sequence, report.target, OracleMode::Exhaustive, m.oracle_result);
    mismatches.push_back(std::move(entry));
  }
  node["mismatches"] = std::move(mismatches);
  return node.dump();
}

}  // namespace potent
