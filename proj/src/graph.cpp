#include "potent/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <string>

namespace potent {

LabeledGraph::LabeledGraph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0 || vertex_count > 64)
    throw Error(ErrorKind::Invalid, "vertex count must be in [0, 64], got " + std::to_string(vertex_count));
  adj_.assign(static_cast<size_t>(n_), 0);
}

void LabeledGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw Error(ErrorKind::Invalid, "vertex " + std::to_string(v) + " out of range");
}

int LabeledGraph::edge_count() const {
  int total = 0;
  for (uint64_t m : adj_) total += std::popcount(m);
  return total / 2;
}

bool LabeledGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<size_t>(u)] >> v) & 1u;
}

void LabeledGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::Invalid, "loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) throw Error(ErrorKind::Invalid, "duplicate edge");
  adj_[static_cast<size_t>(u)] |= uint64_t{1} << v;
  adj_[static_cast<size_t>(v)] |= uint64_t{1} << u;
}

void LabeledGraph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) throw Error(ErrorKind::Invalid, "edge not present");
  adj_[static_cast<size_t>(u)] &= ~(uint64_t{1} << v);
  adj_[static_cast<size_t>(v)] &= ~(uint64_t{1} << u);
}

int LabeledGraph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[static_cast<size_t>(v)]);
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    uint64_t rest = adj_[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

LabeledGraph complete_graph(int r) {
  if (r < 1) throw Error(ErrorKind::Invalid, "complete graph needs r >= 1");
  LabeledGraph g(r);
  for (int u = 0; u < r; ++u)
    for (int v = u + 1; v < r; ++v) g.add_edge(u, v);
  return g;
}

LabeledGraph complete_bipartite(int r, int s) {
  if (r < 1 || s < 1) throw Error(ErrorKind::Invalid, "complete bipartite graph needs r, s >= 1");
  LabeledGraph g(r + s);
  for (int u = 0; u < r; ++u)
    for (int v = 0; v < s; ++v) g.add_edge(u, r + v);
  return g;
}

LabeledGraph cycle_graph(int k) {
  if (k < 3) throw Error(ErrorKind::Invalid, "cycle needs k >= 3");
  LabeledGraph g(k);
  for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
  return g;
}

LabeledGraph path_graph(int k) {
  if (k < 1) throw Error(ErrorKind::Invalid, "path needs k >= 1 edges");
  LabeledGraph g(k + 1);
  for (int v = 0; v < k; ++v) g.add_edge(v, v + 1);
  return g;
}

namespace {

LabeledGraph k6_minus_c6() {
  // complement of the 6-cycle: triangles {0,2,4} and {1,3,5} plus the
  // matching 0-3, 1-4, 2-5
  LabeledGraph c6 = cycle_graph(6);
  LabeledGraph g(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (!c6.has_edge(u, v)) g.add_edge(u, v);
  return g;
}

LabeledGraph k5_minus_p4() {
  LabeledGraph g = complete_graph(5);
  for (int v = 0; v < 4; ++v) g.remove_edge(v, v + 1);
  return g;
}

bool parse_positive(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size() && out >= 1;
}

}  // namespace

LabeledGraph build_named(std::string_view tag) {
  std::string t;
  for (char c : tag) {
    if (c == ' ' || c == '_' || c == '{' || c == '}') continue;
    t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (t == "k23" || t == "k2,3") return complete_bipartite(2, 3);
  if (t == "k33" || t == "k3,3") return complete_bipartite(3, 3);
  if (t == "k6c6" || t == "k6-c6") return k6_minus_c6();
  if (t == "k5p4" || t == "k5-p4") return k5_minus_p4();
  if (t.size() >= 2 && (t[0] == 'k' || t[0] == 'c' || t[0] == 'p')) {
    std::string_view body(t.data() + 1, t.size() - 1);
    size_t comma = body.find(',');
    int a = 0, b = 0;
    if (t[0] == 'k' && comma != std::string_view::npos) {
      if (parse_positive(body.substr(0, comma), a) && parse_positive(body.substr(comma + 1), b))
        return complete_bipartite(a, b);
    } else if (parse_positive(body, a)) {
      if (t[0] == 'k') return complete_graph(a);
      if (t[0] == 'c') return cycle_graph(a);
      if (t[0] == 'p') return path_graph(a);
    }
  }
  throw Error(ErrorKind::Invalid, "unknown pattern tag '" + std::string(tag) + "'");
}

DegreeSequence degree_sequence_of(const LabeledGraph& g) {
  std::vector<int> degrees;
  degrees.reserve(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) degrees.push_back(g.degree(v));
  return DegreeSequence(std::move(degrees));
}

namespace {

struct EmbeddingSearch {
  const LabeledGraph& host;
  const LabeledGraph& pattern;
  std::array<int, 64> order{};     // pattern vertices, high degree first
  std::array<int, 64> map{};       // pattern vertex -> host vertex
  uint64_t used = 0;

  bool extend(int depth) {
    if (depth == pattern.vertex_count()) return true;
    const int p = order[static_cast<size_t>(depth)];
    const int pdeg = pattern.degree(p);
    // host candidates must cover the already-mapped pattern neighbours of p
    uint64_t required = ~uint64_t{0};
    uint64_t pn = pattern.neighbors(p);
    bool constrained = false;
    while (pn) {
      int q = std::countr_zero(pn);
      pn &= pn - 1;
      if (map[static_cast<size_t>(q)] >= 0) {
        required &= host.neighbors(map[static_cast<size_t>(q)]);
        constrained = true;
      }
    }
    uint64_t candidates = constrained ? required : ~uint64_t{0};
    candidates &= ~used;
    if (host.vertex_count() < 64) candidates &= (uint64_t{1} << host.vertex_count()) - 1;
    while (candidates) {
      int g = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (host.degree(g) < pdeg) continue;
      map[static_cast<size_t>(p)] = g;
      used |= uint64_t{1} << g;
      if (extend(depth + 1)) return true;
      used &= ~(uint64_t{1} << g);
      map[static_cast<size_t>(p)] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_embedding(const LabeledGraph& host, const LabeledGraph& pattern) {
  const int hn = host.vertex_count();
  const int pn = pattern.vertex_count();
  if (pn > hn) return std::nullopt;
  if (pn == 0) return std::vector<int>{};

  EmbeddingSearch search{host, pattern};
  for (int v = 0; v < pn; ++v) {
    search.order[static_cast<size_t>(v)] = v;
    search.map[static_cast<size_t>(v)] = -1;
  }
  std::stable_sort(search.order.begin(), search.order.begin() + pn,
                   [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
  if (!search.extend(0)) return std::nullopt;
  std::vector<int> phi(static_cast<size_t>(pn));
  for (int v = 0; v < pn; ++v) phi[static_cast<size_t>(v)] = search.map[static_cast<size_t>(v)];
  return phi;
}

bool validate_embedding(const LabeledGraph& host, const LabeledGraph& pattern, const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != pattern.vertex_count()) return false;
  uint64_t seen = 0;
  for (int img : phi) {
    if (img < 0 || img >= host.vertex_count()) return false;
    if ((seen >> img) & 1u) return false;
    seen |= uint64_t{1} << img;
  }
  for (auto [u, v] : pattern.edges()) {
    if (!host.has_edge(phi[static_cast<size_t>(u)], phi[static_cast<size_t>(v)])) return false;
  }
  return true;
}

LabeledGraph remove_subgraph_edges(const LabeledGraph& host, const std::vector<int>& phi,
                                   const LabeledGraph& pattern) {
  if (!validate_embedding(host, pattern, phi))
    throw Error(ErrorKind::Invalid, "embedding does not map the pattern into the host");
  LabeledGraph out = host;
  for (auto [u, v] : pattern.edges()) out.remove_edge(phi[static_cast<size_t>(u)], phi[static_cast<size_t>(v)]);
  return out;
}

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b) {
  LabeledGraph out(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  const int shift = a.vertex_count();
  for (auto [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

TargetPattern TargetPattern::named(TargetTag tag) {
  switch (tag) {
    case TargetTag::K23:
      return TargetPattern{tag, complete_bipartite(2, 3)};
    case TargetTag::K5minusP4:
      return TargetPattern{tag, k5_minus_p4()};
    case TargetTag::K33:
      return TargetPattern{tag, complete_bipartite(3, 3)};
    case TargetTag::K6minusC6:
      return TargetPattern{tag, k6_minus_c6()};
    case TargetTag::Custom:
      break;
  }
  throw Error(ErrorKind::Invalid, "named() requires a non-custom tag");
}

TargetPattern TargetPattern::custom(LabeledGraph g) {
  return TargetPattern{TargetTag::Custom, std::move(g)};
}

TargetPattern TargetPattern::from_name(std::string_view name) {
  std::string t;
  for (char c : name) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "k23") return named(TargetTag::K23);
  if (t == "k5p4") return named(TargetTag::K5minusP4);
  if (t == "k33") return named(TargetTag::K33);
  if (t == "k6c6") return named(TargetTag::K6minusC6);
  throw Error(ErrorKind::Invalid, "unknown target '" + std::string(name) + "' (expected k23, k5p4, k33 or k6c6)");
}

std::string_view TargetPattern::name() const {
  switch (tag) {
    case TargetTag::K23:
      return "k23";
    case TargetTag::K5minusP4:
      return "k5p4";
    case TargetTag::K33:
      return "k33";
    case TargetTag::K6minusC6:
      return "k6c6";
    case TargetTag::Custom:
      return "custom";
  }
  return "custom";
}

}  // namespace potent
