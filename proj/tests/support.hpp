#pragma once

// Test-side oracles, independent of the library implementation paths they
// check: degree sequences realized by explicit enumeration of all graphs on
// n <= 7 vertices, brute-force parametric family matchers that enumerate the
// printed ranges, and a re-validator for reported condition violations.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "potent/characterize.hpp"
#include "potent/sequence.hpp"

namespace testsup {

using potent::Bindings;
using potent::ConditionId;
using potent::DegreeSequence;
using potent::TheoremId;

// Every non-increasing sequence with n terms over [lo, hi].
inline std::vector<std::vector<int>> all_nonincreasing(int n, int lo, int hi) {
  std::vector<std::vector<int>> out;
  if (lo > hi) return out;
  std::vector<int> cur(static_cast<size_t>(n), hi);
  for (;;) {
    out.push_back(cur);
    int j = n - 1;
    while (j >= 0 && cur[static_cast<size_t>(j)] == lo) --j;
    if (j < 0) break;
    const int v = cur[static_cast<size_t>(j)] - 1;
    for (int p = j; p < n; ++p) cur[static_cast<size_t>(p)] = v;
  }
  return out;
}

// Degree sequences of all 2^(n(n-1)/2) graphs on n labeled vertices (n <= 7).
inline const std::set<std::vector<int>>& brute_degree_sequences(int n) {
  static std::map<int, std::set<std::vector<int>>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::set<std::vector<int>> seqs;
  const int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pair_list;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pair_list.emplace_back(u, v);
  for (long long mask = 0; mask < (1LL << pairs); ++mask) {
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (int b = 0; b < pairs; ++b) {
      if ((mask >> b) & 1) {
        ++deg[static_cast<size_t>(pair_list[static_cast<size_t>(b)].first)];
        ++deg[static_cast<size_t>(pair_list[static_cast<size_t>(b)].second)];
      }
    }
    std::sort(deg.begin(), deg.end(), std::greater<int>());
    seqs.insert(std::move(deg));
  }
  return cache.emplace(n, std::move(seqs)).first->second;
}

inline std::vector<int> expand(std::initializer_list<std::pair<int, int>> vc) {
  std::vector<int> out;
  for (auto [value, count] : vc) out.insert(out.end(), static_cast<size_t>(count), value);
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

// ---------------------------------------------------------------------------
// brute-force family matchers: enumerate the printed parameter ranges, build
// the shape's multiset, compare. Independent of the positional parser.

inline std::vector<Bindings> brute_t24_c2(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  std::vector<Bindings> out;
  for (int k = 3; k <= n - 2; ++k)
    for (int t = 3; t <= n - 2; ++t) {
      if ((k + t) % 2 == 0) continue;
      if (expand({{n - 1, 1}, {k, 1}, {2, t}, {1, n - 2 - t}}) == pi)
        out.push_back(Bindings{{"k", k}, {"t", t}});
    }
  return out;
}

inline std::vector<Bindings> brute_t24_c3(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  std::vector<Bindings> out;
  for (int k = 1; k <= (n - 1) / 2 - 1; ++k)
    for (int i = 3; i <= n - 2 * k; ++i) {
      if (expand({{n - k, 1}, {k + i, 1}, {2, i}, {1, n - i - 2}}) == pi)
        out.push_back(Bindings{{"i", i}, {"k", k}});
    }
  return out;
}

// Two free heads followed by fixed-value runs: subtract the runs, keep the
// leftover pair as (d1, d2) when the concatenation stays sorted.
inline std::optional<std::pair<int, int>> subtract_heads2(const std::vector<int>& pi,
                                                          const std::vector<int>& runs, int first_run_value) {
  if (pi.size() != runs.size() + 2) return std::nullopt;
  std::vector<int> rest = runs;  // sorted desc by construction
  std::vector<int> heads;
  // multiset difference
  std::vector<int> remaining = pi;
  for (int r : rest) {
    auto it = std::find(remaining.begin(), remaining.end(), r);
    if (it == remaining.end()) return std::nullopt;
    remaining.erase(it);
  }
  if (remaining.size() != 2) return std::nullopt;
  std::sort(remaining.begin(), remaining.end(), std::greater<int>());
  if (first_run_value > 0 && remaining[1] < first_run_value) return std::nullopt;
  return std::make_pair(remaining[0], remaining[1]);
}

inline std::vector<Bindings> brute_t31_c6(const std::vector<int>& pi, int shape) {
  const int n = static_cast<int>(pi.size());
  std::vector<Bindings> out;
  for (int t = 0; t <= n - 6; ++t) {
    std::vector<int> runs = shape == 1 ? expand({{3, 4}, {2, t}, {1, n - 6 - t}})
                                       : expand({{4, 2}, {3, 2}, {2, t}, {1, n - 6 - t}});
    const int first = shape == 1 ? 3 : 4;
    if (auto heads = subtract_heads2(pi, runs, first))
      out.push_back(Bindings{{"d1", heads->first}, {"d2", heads->second}, {"t", t}});
  }
  return out;
}

inline std::vector<Bindings> brute_t31_c7(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  std::vector<Bindings> out;
  for (int t = 0; t <= n - 7; ++t) {
    if (auto heads = subtract_heads2(pi, expand({{4, 1}, {3, 4}, {2, t}, {1, n - 7 - t}}), 4))
      out.push_back(Bindings{{"d1", heads->first}, {"d2", heads->second}, {"t", t}});
  }
  return out;
}

inline std::vector<Bindings> brute_t31_c8(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  std::vector<Bindings> out;
  for (int t : {5, 6})
    for (int i = 1; 2 * i <= n; ++i)
      for (int k = t; k <= n - 2 * i && k <= n - 2; ++k) {
        if (i > (n - k) / 2) continue;
        if (expand({{n - i, 1}, {k + i, 1}, {4, t}, {2, k - t}, {1, n - 2 - k}}) == pi)
          out.push_back(Bindings{{"i", i}, {"k", k}, {"t", t}});
      }
  return out;
}

inline std::vector<Bindings> brute_t32_c6(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  std::vector<Bindings> out;
  for (int k = 0; k <= n - 3; ++k)
    for (int t = 0; t + k <= n - 3; ++t) {
      std::vector<int> runs = expand({{3, k}, {2, t}, {1, n - 3 - k - t}});
      std::vector<int> remaining = pi;
      bool ok = true;
      for (int r : runs) {
        auto it = std::find(remaining.begin(), remaining.end(), r);
        if (it == remaining.end()) {
          ok = false;
          break;
        }
        remaining.erase(it);
      }
      if (!ok || remaining.size() != 3) continue;
      std::sort(remaining.begin(), remaining.end(), std::greater<int>());
      const int first = k > 0 ? 3 : (t > 0 ? 2 : (n - 3 - k - t > 0 ? 1 : 0));
      if (first > 0 && remaining[2] < first) continue;
      out.push_back(Bindings{
          {"d1", remaining[0]}, {"d2", remaining[1]}, {"d3", remaining[2]}, {"k", k}, {"t", t}});
    }
  return out;
}

inline std::vector<Bindings> brute_t32_c7(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  std::vector<Bindings> out;
  for (int t = 0; t <= n - 6; ++t) {
    if (auto heads = subtract_heads2(pi, expand({{3, 4}, {2, t}, {1, n - 6 - t}}), 3))
      out.push_back(Bindings{{"d1", heads->first}, {"d2", heads->second}, {"t", t}});
  }
  return out;
}

inline std::vector<Bindings> brute_t32_c8(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  std::vector<Bindings> out;
  for (int t = 4; t <= n; ++t)
    for (int i = 1; 2 * i <= n - t - 1; ++i)
      for (int k = i + t + 1; k <= n - i; ++k) {
        if (n - 2 - k + i < 0) continue;
        if (expand({{n - i, 1}, {k, 1}, {t, 1}, {3, t}, {2, k - i - t - 1}, {1, n - 2 - k + i}}) == pi)
          out.push_back(Bindings{{"i", i}, {"k", k}, {"t", t}});
      }
  return out;
}

// ---------------------------------------------------------------------------
// independent transcriptions of the literal exception lists

inline std::vector<std::string> fixed_exception_texts(TheoremId id) {
  switch (id) {
    case TheoremId::T2_3:
      return {"3^2 2^4", "3^2 2^5", "4^3 2^3"};
    case TheoremId::T2_4:
      return {"3^2 2^4", "3^2 2^5"};
    case TheoremId::T3_1:
      return {"5^4 3^2 2", "4^6",     "3^6 2",   "6^4 3^4", "4^2 3^6",
              "4 3^6 2",   "3^6 2^2", "3^8",     "3^7 1",   "4 3^8",
              "4 3^7 1",   "3^8 2",   "3^7 2 1", "3^9 1",   "3^8 1^2"};
    case TheoremId::T3_2:
      return {"3^6 2", "4^2 3^6", "4 3^6 2", "3^6 2^2", "3^8",   "3^7 1",
              "4 3^8", "4 3^7 1", "3^8 2",   "3^7 2 1", "3^9 1", "3^8 1^2"};
  }
  return {};
}

// parametric entries as (n -> terms) builders, in printed order after the
// fixed entries
using ParamEntry = std::optional<std::vector<int>> (*)(int n);

inline std::vector<ParamEntry> param_exception_entries(TheoremId id) {
  static auto e_n1_35 = [](int n) -> std::optional<std::vector<int>> {
    if (n < 6) return std::nullopt;
    return expand({{n - 1, 1}, {3, 5}, {1, n - 6}});
  };
  static auto e_n1_36 = [](int n) -> std::optional<std::vector<int>> {
    if (n < 7) return std::nullopt;
    return expand({{n - 1, 1}, {3, 6}, {1, n - 7}});
  };
  static auto e_n1_42_34 = [](int n) -> std::optional<std::vector<int>> {
    if (n < 7) return std::nullopt;
    return expand({{n - 1, 1}, {4, 2}, {3, 4}, {1, n - 7}});
  };
  static auto e_n1_42_35 = [](int n) -> std::optional<std::vector<int>> {
    if (n < 8) return std::nullopt;
    return expand({{n - 1, 1}, {4, 2}, {3, 5}, {1, n - 8}});
  };
  static auto e_n1_53_33 = [](int n) -> std::optional<std::vector<int>> {
    if (n < 7) return std::nullopt;
    return expand({{n - 1, 1}, {5, 3}, {3, 3}, {1, n - 7}});
  };
  static auto e_n2_4_35 = [](int n) -> std::optional<std::vector<int>> {
    if (n < 7) return std::nullopt;
    return expand({{n - 2, 1}, {4, 1}, {3, 5}, {1, n - 7}});
  };
  static auto e_n2_4_36 = [](int n) -> std::optional<std::vector<int>> {
    if (n < 8) return std::nullopt;
    return expand({{n - 2, 1}, {4, 1}, {3, 6}, {1, n - 8}});
  };
  static auto e_n3_36 = [](int n) -> std::optional<std::vector<int>> {
    if (n < 7) return std::nullopt;
    return expand({{n - 3, 1}, {3, 6}, {1, n - 7}});
  };
  static auto e_n3_37 = [](int n) -> std::optional<std::vector<int>> {
    if (n < 8) return std::nullopt;
    return expand({{n - 3, 1}, {3, 7}, {1, n - 8}});
  };

  switch (id) {
    case TheoremId::T2_3:
      return {e_n1_35, e_n1_36};
    case TheoremId::T2_4:
      return {};
    case TheoremId::T3_1:
      return {e_n1_42_34, e_n1_42_35, e_n1_53_33, e_n2_4_35, e_n2_4_36, e_n3_36, e_n3_37};
    case TheoremId::T3_2:
      return {e_n1_42_34, e_n1_42_35, e_n2_4_35, e_n2_4_36, e_n3_36, e_n3_37};
  }
  return {};
}

// entry numbers (1-based, printed order) matching pi
inline std::vector<int> brute_exception_entries(const std::vector<int>& pi, TheoremId id) {
  std::vector<int> hits;
  int index = 0;
  for (const std::string& text : fixed_exception_texts(id)) {
    ++index;
    if (DegreeSequence::parse(text).terms() == pi) hits.push_back(index);
  }
  for (ParamEntry entry : param_exception_entries(id)) {
    ++index;
    auto inst = entry(static_cast<int>(pi.size()));
    if (inst && *inst == pi) hits.push_back(index);
  }
  return hits;
}

// ---------------------------------------------------------------------------
// re-validation of a reported violation directly against the printed text

inline bool revalidates(const DegreeSequence& pi, const ConditionId& cid) {
  const int n = pi.n();
  const auto& t = pi.terms();
  auto d = [&](int k) { return pi.d(k); };
  auto has = [&](const char* key) { return cid.bindings.count(key) > 0; };
  auto bind = [&](const char* key) { return cid.bindings.at(key); };

  switch (cid.theorem) {
    case TheoremId::T2_3:
      if (cid.condition == 1) return !(d(2) >= 3 && d(5) >= 2);
      if (cid.condition == 2) return d(1) == n - 1 && d(2) == 3 && d(5) != 3;
      if (cid.condition == 3) {
        auto inst = potent::exception_entry_at(TheoremId::T2_3, bind("entry"), n);
        return inst && inst->terms() == t;
      }
      return false;
    case TheoremId::T2_4:
      if (cid.condition == 1) return !(d(2) >= 3 && d(5) >= 2);
      if (cid.condition == 2) {
        const int k = bind("k"), tt = bind("t");
        return k >= 3 && k <= n - 2 && tt >= 3 && tt <= n - 2 && (k + tt) % 2 == 1 &&
               expand({{n - 1, 1}, {k, 1}, {2, tt}, {1, n - 2 - tt}}) == t;
      }
      if (cid.condition == 3) {
        const int i = bind("i"), k = bind("k");
        return i >= 3 && i <= n - 2 * k && k >= 1 && k <= (n - 1) / 2 - 1 &&
               expand({{n - k, 1}, {k + i, 1}, {2, i}, {1, n - i - 2}}) == t;
      }
      if (cid.condition == 4) {
        auto inst = potent::exception_entry_at(TheoremId::T2_4, bind("entry"), n);
        return inst && inst->terms() == t;
      }
      return false;
    case TheoremId::T3_1:
      switch (cid.condition) {
        case 1:
          return d(6) < 3;
        case 2: {
          const int i = bind("i");
          return (i == 1 || i == 2) && d(1) == n - i && d(4 - i) < 4;
        }
        case 3:
          return d(2) == n - 1 && !(d(3) >= 5 || d(6) >= 4);
        case 4: {
          const int i = bind("i");
          return i >= 3 && i <= n - 4 && d(1) + d(2) == 2 * n - i && d(n - i + 3) == 1 &&
                 !(d(3) >= 5 || d(6) >= 4);
        }
        case 5: {
          const int i = bind("i");
          return i >= 4 && i <= n - 3 && d(1) + d(2) == 2 * n - i && d(n - i + 4) == 1 && d(3) < 4;
        }
        case 6: {
          const int tt = bind("t");
          std::vector<int> shape =
              bind("shape") == 1
                  ? expand({{bind("d1"), 1}, {bind("d2"), 1}, {3, 4}, {2, tt}, {1, n - 6 - tt}})
                  : expand({{bind("d1"), 1}, {bind("d2"), 1}, {4, 2}, {3, 2}, {2, tt}, {1, n - 6 - tt}});
          return shape == t && bind("d1") + bind("d2") > n + tt + 2;
        }
        case 7: {
          const int tt = bind("t");
          return expand({{bind("d1"), 1}, {bind("d2"), 1}, {4, 1}, {3, 4}, {2, tt}, {1, n - 7 - tt}}) == t &&
                 bind("d1") + bind("d2") > n + tt + 3;
        }
        case 8: {
          const int i = bind("i"), k = bind("k"), tt = bind("t");
          return (tt == 5 || tt == 6) && i >= 1 && i <= (n - k) / 2 && k >= tt && k <= n - 2 * i &&
                 expand({{n - i, 1}, {k + i, 1}, {4, tt}, {2, k - tt}, {1, n - 2 - k}}) == t;
        }
        case 9: {
          auto inst = potent::exception_entry_at(TheoremId::T3_1, bind("entry"), n);
          return inst && inst->terms() == t;
        }
      }
      return false;
    case TheoremId::T3_2:
      switch (cid.condition) {
        case 1:
          return d(6) < 3;
        case 2: {
          const int i = bind("i");
          return (i == 1 || i == 2) && d(1) == n - i && d(4 - i) < 4;
        }
        case 3:
          return d(2) == n - 1 && d(4) < 4;
        case 4: {
          const int i = bind("i");
          return i >= 3 && i <= n - 4 && d(1) + d(2) == 2 * n - i && d(n - i + 3) == 1 && d(4) < 4;
        }
        case 5: {
          const int i = bind("i");
          return i >= 4 && i <= n - 3 && d(1) + d(2) == 2 * n - i && d(n - i + 4) == 1 && d(3) < 4;
        }
        case 6: {
          const int k = bind("k"), tt = bind("t");
          return expand({{bind("d1"), 1}, {bind("d2"), 1}, {bind("d3"), 1}, {3, k}, {2, tt},
                         {1, n - 3 - k - tt}}) == t &&
                 bind("d1") + bind("d2") + bind("d3") > n + 2 * k + tt + 1;
        }
        case 7: {
          const int tt = bind("t");
          return expand({{bind("d1"), 1}, {bind("d2"), 1}, {3, 4}, {2, tt}, {1, n - 6 - tt}}) == t &&
                 bind("d1") + bind("d2") > n + tt + 2;
        }
        case 8: {
          const int i = bind("i"), k = bind("k"), tt = bind("t");
          return tt >= 4 && tt <= k - i - 1 && i >= 1 && 2 * i <= n - tt - 1 && k >= i + tt + 1 &&
                 k <= n - i &&
                 expand({{n - i, 1}, {k, 1}, {tt, 1}, {3, tt}, {2, k - i - tt - 1}, {1, n - 2 - k + i}}) == t;
        }
        case 9: {
          auto inst = potent::exception_entry_at(TheoremId::T3_2, bind("entry"), n);
          return inst && inst->terms() == t;
        }
      }
      return false;
  }
  (void)has;
  return false;
}

inline bool same_binding_set(std::vector<Bindings> a, std::vector<Bindings> b) {
  auto key = [](const Bindings& m) {
    std::string s;
    for (const auto& [k, v] : m) s += k + "=" + std::to_string(v) + ";";
    return s;
  };
  std::vector<std::string> ka, kb;
  for (const auto& m : a) ka.push_back(key(m));
  for (const auto& m : b) kb.push_back(key(m));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

}  // namespace testsup
