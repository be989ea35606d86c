#pragma once

// Small labeled simple graphs (up to 64 vertices), named pattern
// constructions, and subgraph embedding search. Vertex labels are 0-based
// internally; reports translate to 1-based positions.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "potent/error.hpp"
#include "potent/sequence.hpp"

namespace potent {

class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int vertex_count);

  int vertex_count() const { return n_; }
  int edge_count() const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);     // throws Invalid on loops, duplicates, range
  void remove_edge(int u, int v);  // throws Invalid when absent
  uint64_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const;

  // Edge list with u < v, sorted lexicographically (canonical).
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const LabeledGraph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<uint64_t> adj_;
};

LabeledGraph complete_graph(int r);
LabeledGraph complete_bipartite(int r, int s);
LabeledGraph cycle_graph(int k);  // k >= 3
LabeledGraph path_graph(int k);   // k edges on k+1 vertices

// Accepts k23, k33, k5p4 / k5-p4, k6c6 / k6-c6 and the parametric forms
// kN, kR,S, cN, pN (case-insensitive). Throws Invalid on unknown tags.
LabeledGraph build_named(std::string_view tag);

DegreeSequence degree_sequence_of(const LabeledGraph& g);

// Injective map phi with phi(u)phi(v) an edge of host for every pattern edge
// (plain subgraph containment, not induced). Deterministic backtracking with
// degree pruning; nullopt when no embedding exists.
std::optional<std::vector<int>> find_embedding(const LabeledGraph& host, const LabeledGraph& pattern);

// Independent validity check used on every reported witness.
bool validate_embedding(const LabeledGraph& host, const LabeledGraph& pattern, const std::vector<int>& phi);

// Host with the phi-images of the pattern's edges deleted; vertex set kept.
LabeledGraph remove_subgraph_edges(const LabeledGraph& host, const std::vector<int>& phi,
                                   const LabeledGraph& pattern);

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b);

enum class TargetTag { K23, K5minusP4, K33, K6minusC6, Custom };

struct TargetPattern {
  TargetTag tag = TargetTag::Custom;
  LabeledGraph graph;

  static TargetPattern named(TargetTag tag);
  static TargetPattern custom(LabeledGraph g);
  // Parses the CLI names k23, k5p4, k33, k6c6.
  static TargetPattern from_name(std::string_view name);

  std::string_view name() const;
  int min_n() const { return graph.vertex_count(); }
};

}  // namespace potent
