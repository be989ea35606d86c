#pragma once

// Canonical JSON serialization for reports. Field order is fixed and output
// is byte-identical for identical inputs (elapsed time is deliberately not
// part of the verification report JSON).

#include <string>

#include "potent/characterize.hpp"
#include "potent/oracle.hpp"
#include "potent/sigma.hpp"
#include "potent/verify.hpp"

namespace potent {

// {"n": ..., "edges": [[u, v], ...]} with 1-based vertices, u < v, sorted.
std::string graph_to_json(const LabeledGraph& g);

// {"potential": ..., "violated": [{"theorem": ..., "condition": ..., "bindings": {...}}]}
std::string verdict_to_json(const PotentialVerdict& verdict);

// Witness: {"sequence", "target", "mode", "potential": true, "graph", "embedding"}
// (1-based positions); absence: {"sequence", "target", "mode", "potential": false,
// "exhausted": true, "states_explored"}.
std::string oracle_to_json(const DegreeSequence& pi, const TargetPattern& target, OracleMode mode,
                           const OracleResult& result);

// {"target", "n", "sigma", "extremal", "method", "sequences_scanned"} plus
// "degenerate": true when no non-potential sequence exists.
std::string sigma_to_json(const SigmaResult& result);

std::string report_to_json(const VerificationReport& report);

}  // namespace potent
