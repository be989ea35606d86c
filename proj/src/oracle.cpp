#include "potent/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace potent {

std::string_view oracle_mode_name(OracleMode mode) {
  return mode == OracleMode::Exhaustive ? "exhaustive" : "top-degree";
}

namespace {

void check_cap(int n, int max_vertices) {
  if (max_vertices < 1 || max_vertices > kHardOracleCap)
    throw Error(ErrorKind::Invalid,
                "vertex cap must be in [1, " + std::to_string(kHardOracleCap) + "]");
  if (n > max_vertices)
    throw Error(ErrorKind::Cap, "sequence has " + std::to_string(n) + " terms, cap is " +
                                    std::to_string(max_vertices));
}

// Erdos-Gallai on a small unsorted buffer (degrees of the still-open suffix).
bool residual_graphic(const int* r, int m) {
  std::array<int, kHardOracleCap> d;
  long long sum = 0;
  for (int i = 0; i < m; ++i) {
    int x = r[i];
    sum += x;
    int j = i;
    while (j > 0 && d[static_cast<size_t>(j - 1)] < x) {
      d[static_cast<size_t>(j)] = d[static_cast<size_t>(j - 1)];
      --j;
    }
    d[static_cast<size_t>(j)] = x;
  }
  if (sum % 2 != 0) return false;
  long long prefix = 0;
  for (int k = 1; k <= m; ++k) {
    prefix += d[static_cast<size_t>(k - 1)];
    long long rhs = static_cast<long long>(k) * (k - 1);
    for (int i = k; i < m; ++i) rhs += std::min(d[static_cast<size_t>(i)], k);
    if (prefix > rhs) return false;
    if (d[static_cast<size_t>(k - 1)] < k) break;
  }
  return true;
}

struct RealizationSearch {
  int n = 0;
  std::array<int, kHardOracleCap> residual{};
  std::array<uint64_t, kHardOracleCap> adj{};
  const std::function<bool(const LabeledGraph&)>* visit = nullptr;
  bool stopped = false;

  bool emit() {
    LabeledGraph g(n);
    for (int u = 0; u < n; ++u) {
      uint64_t rest = adj[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        g.add_edge(u, v);
      }
    }
    return (*visit)(g);
  }

  void at_vertex(int v) {
    if (stopped) return;
    if (v == n) {
      if (!emit()) stopped = true;
      return;
    }
    if (residual[static_cast<size_t>(v)] == 0) {
      at_vertex(v + 1);
      return;
    }
    choose(v, residual[static_cast<size_t>(v)], v + 1);
  }

  // Pick `need` more neighbours for v among positions >= from.
  void choose(int v, int need, int from) {
    if (stopped) return;
    if (need == 0) {
      if (residual_graphic(residual.data() + v + 1, n - v - 1)) at_vertex(v + 1);
      return;
    }
    for (int u = from; u + need <= n; ++u) {
      if (residual[static_cast<size_t>(u)] == 0) continue;
      adj[static_cast<size_t>(v)] |= uint64_t{1} << u;
      adj[static_cast<size_t>(u)] |= uint64_t{1} << v;
      --residual[static_cast<size_t>(u)];
      choose(v, need - 1, u + 1);
      ++residual[static_cast<size_t>(u)];
      adj[static_cast<size_t>(v)] &= ~(uint64_t{1} << u);
      adj[static_cast<size_t>(u)] &= ~(uint64_t{1} << v);
      if (stopped) return;
    }
  }
};

}  // namespace

void enumerate_realizations(const DegreeSequence& pi, int max_vertices,
                            const std::function<bool(const LabeledGraph&)>& visit) {
  check_cap(pi.n(), max_vertices);
  if (!is_graphic(pi))
    throw Error(ErrorKind::Domain, "cannot enumerate realizations of the non-graphic sequence " + pi.format());

  RealizationSearch search;
  search.n = pi.n();
  for (int i = 0; i < pi.n(); ++i) search.residual[static_cast<size_t>(i)] = pi.terms()[static_cast<size_t>(i)];
  search.visit = &visit;
  search.at_vertex(0);
}

namespace {

struct CompletionSearch {
  int n = 0;
  std::array<int, kHardOracleCap> residual{};
  std::array<uint64_t, kHardOracleCap> blocked{};  // forbidden plus already chosen
  std::array<uint64_t, kHardOracleCap> chosen{};
  long long* states = nullptr;

  bool feasible(int from) const {
    if (!residual_graphic(residual.data() + from, n - from)) return false;
    // capacity: each open vertex needs enough unblocked partners with demand
    uint64_t suffix = n < 64 ? ((uint64_t{1} << n) - 1) & ~((uint64_t{1} << from) - 1)
                             : ~((uint64_t{1} << from) - 1);
    uint64_t positive = 0;
    for (int u = from; u < n; ++u)
      if (residual[static_cast<size_t>(u)] > 0) positive |= uint64_t{1} << u;
    for (int u = from; u < n; ++u) {
      if (residual[static_cast<size_t>(u)] == 0) continue;
      uint64_t partners = positive & suffix & ~blocked[static_cast<size_t>(u)] & ~(uint64_t{1} << u);
      if (std::popcount(partners) < residual[static_cast<size_t>(u)]) return false;
    }
    return true;
  }

  bool solve(int v) {
    if (states) ++*states;
    if (v == n) return true;
    if (residual[static_cast<size_t>(v)] == 0) return solve(v + 1);
    return choose(v, residual[static_cast<size_t>(v)], v + 1);
  }

  bool choose(int v, int need, int from) {
    if (need == 0) return feasible(v + 1) && solve(v + 1);
    for (int u = from; u + need <= n; ++u) {
      if (residual[static_cast<size_t>(u)] == 0) continue;
      if ((blocked[static_cast<size_t>(v)] >> u) & 1u) continue;
      chosen[static_cast<size_t>(v)] |= uint64_t{1} << u;
      chosen[static_cast<size_t>(u)] |= uint64_t{1} << v;
      blocked[static_cast<size_t>(v)] |= uint64_t{1} << u;
      blocked[static_cast<size_t>(u)] |= uint64_t{1} << v;
      --residual[static_cast<size_t>(u)];
      if (choose(v, need - 1, u + 1)) return true;
      ++residual[static_cast<size_t>(u)];
      chosen[static_cast<size_t>(v)] &= ~(uint64_t{1} << u);
      chosen[static_cast<size_t>(u)] &= ~(uint64_t{1} << v);
      blocked[static_cast<size_t>(v)] &= ~(uint64_t{1} << u);
      blocked[static_cast<size_t>(u)] &= ~(uint64_t{1} << v);
    }
    return false;
  }
};

std::optional<LabeledGraph> complete_impl(const std::vector<int>& residual, const LabeledGraph& placed,
                                          long long* states) {
  const int n = placed.vertex_count();
  if (static_cast<int>(residual.size()) != n)
    throw Error(ErrorKind::Invalid, "residual length does not match the vertex count");
  if (n > kHardOracleCap) throw Error(ErrorKind::Cap, "completion search is capped at 16 vertices");

  long long sum = 0;
  CompletionSearch search;
  search.n = n;
  search.states = states;
  for (int i = 0; i < n; ++i) {
    const int r = residual[static_cast<size_t>(i)];
    if (r < 0) throw Error(ErrorKind::Invalid, "negative residual degree");
    if (r + placed.degree(i) > n - 1) return std::nullopt;  // no room at vertex i
    search.residual[static_cast<size_t>(i)] = r;
    search.blocked[static_cast<size_t>(i)] = placed.neighbors(i);
    sum += r;
  }
  if (sum % 2 != 0) return std::nullopt;
  if (!search.feasible(0)) return std::nullopt;
  if (!search.solve(0)) return std::nullopt;

  LabeledGraph g(n);
  for (int u = 0; u < n; ++u) {
    uint64_t rest = search.chosen[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      g.add_edge(u, v);
    }
  }
  return g;
}

void check_oracle_domain(const DegreeSequence& pi, const TargetPattern& target, int max_vertices) {
  check_cap(pi.n(), max_vertices);
  if (!pi.all_positive()) throw Error(ErrorKind::Domain, "the oracle applies to sequences without zero terms");
  if (!is_graphic(pi)) throw Error(ErrorKind::Domain, "sequence " + pi.format() + " is not graphic");
  if (target.graph.vertex_count() > pi.n())
    throw Error(ErrorKind::Domain, "target has more vertices than the sequence has terms");
}

OracleResult oracle_exhaustive(const DegreeSequence& pi, const TargetPattern& target, int max_vertices) {
  OracleResult result;
  enumerate_realizations(pi, max_vertices, [&](const LabeledGraph& g) {
    ++result.states_explored;
    if (auto phi = find_embedding(g, target.graph)) {
      result.witness = RealizationWitness{g, std::move(*phi)};
      return false;
    }
    return true;
  });
  return result;
}

struct TopDegreeSearch {
  const std::vector<int>& degrees;
  const LabeledGraph& pattern;
  int h;
  int n;
  OracleResult result;
  std::array<int, 8> assign{};
  uint64_t used = 0;

  bool place(int j) {
    if (j == h) {
      ++result.states_explored;
      LabeledGraph placed(n);
      for (auto [u, v] : pattern.edges())
        placed.add_edge(assign[static_cast<size_t>(u)], assign[static_cast<size_t>(v)]);
      std::vector<int> residual(static_cast<size_t>(n), 0);
      for (int i = 0; i < n; ++i) residual[static_cast<size_t>(i)] = degrees[static_cast<size_t>(i)] - placed.degree(i);
      auto completion = complete_impl(residual, placed, &result.states_explored);
      if (!completion) return false;
      LabeledGraph whole = placed;
      for (auto [u, v] : completion->edges()) whole.add_edge(u, v);
      std::vector<int> phi(assign.begin(), assign.begin() + h);
      result.witness = RealizationWitness{std::move(whole), std::move(phi)};
      return true;
    }
    for (int p = 0; p < h; ++p) {
      if ((used >> p) & 1u) continue;
      if (pattern.degree(j) > degrees[static_cast<size_t>(p)]) continue;
      assign[static_cast<size_t>(j)] = p;
      used |= uint64_t{1} << p;
      if (place(j + 1)) return true;
      used &= ~(uint64_t{1} << p);
    }
    return false;
  }
};

}  // namespace

std::optional<LabeledGraph> complete_under_forbidden(const std::vector<int>& residual,
                                                     const LabeledGraph& placed) {
  return complete_impl(residual, placed, nullptr);
}

OracleResult oracle_potential(const DegreeSequence& pi, const TargetPattern& target, OracleMode mode,
                              int max_vertices) {
  check_oracle_domain(pi, target, max_vertices);
  if (mode == OracleMode::Exhaustive) return oracle_exhaustive(pi, target, max_vertices);

  TopDegreeSearch search{pi.terms(), target.graph, target.graph.vertex_count(), pi.n(), {}, {}, 0};
  search.place(0);
  return std::move(search.result);
}

}  // namespace potent
