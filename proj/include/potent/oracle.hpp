#pragma once

// Ground truth by exhaustive search: realizations of a degree sequence are
// enumerated by deterministic backtracking and scanned for an embedding of
// the target pattern. An absent result is a proof by exhaustion.

#include <functional>
#include <optional>

#include "potent/graph.hpp"
#include "potent/sequence.hpp"

namespace potent {

inline constexpr int kDefaultOracleCap = 10;
inline constexpr int kHardOracleCap = 16;

// Visits every labeled simple graph realizing pi, each exactly once, in a
// fixed lexicographic search order. Vertices are assigned high degree first;
// states whose residual sequence is not graphic are pruned. The visitor
// returns false to stop early. Throws on non-graphic input or when n exceeds
// max_vertices.
void enumerate_realizations(const DegreeSequence& pi, int max_vertices,
                            const std::function<bool(const LabeledGraph&)>& visit);

enum class OracleMode { Exhaustive, TopDegree };

std::string_view oracle_mode_name(OracleMode mode);

struct RealizationWitness {
  LabeledGraph graph;
  std::vector<int> embedding;  // pattern vertex -> realization vertex (0-based)
};

struct OracleResult {
  std::optional<RealizationWitness> witness;
  // Exhaustive: realizations examined. TopDegree: placements attempted plus
  // completion search nodes. Deterministic for fixed inputs.
  long long states_explored = 0;
};

// Exhaustive mode scans enumerate_realizations for the first realization
// admitting an embedding of the target. TopDegree places the target on the
// |V(H)| largest-degree positions in every degree-compatible way and tries to
// complete the remaining degrees with edges disjoint from the placement; the
// two modes agree on existence. Requires pi graphic with all terms >= 1,
// |V(H)| <= n <= max_vertices.
OracleResult oracle_potential(const DegreeSequence& pi, const TargetPattern& target, OracleMode mode,
                              int max_vertices = kDefaultOracleCap);

// A graph on the same vertex set as `placed`, edge-disjoint from it, whose
// degree at vertex i equals residual[i]; nullopt when impossible. Candidate
// edges are tried in lexicographic order.
std::optional<LabeledGraph> complete_under_forbidden(const std::vector<int>& residual,
                                                     const LabeledGraph& placed);

}  // namespace potent
