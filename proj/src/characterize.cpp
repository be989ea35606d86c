#include "potent/characterize.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>

namespace potent {

std::string_view theorem_label(TheoremId id) {
  switch (id) {
    case TheoremId::T2_3:
      return "T2.3";
    case TheoremId::T2_4:
      return "T2.4";
    case TheoremId::T3_1:
      return "T3.1";
    case TheoremId::T3_2:
      return "T3.2";
  }
  return "?";
}

TheoremId theorem_for_target(TargetTag tag) {
  switch (tag) {
    case TargetTag::K23:
      return TheoremId::T2_3;
    case TargetTag::K5minusP4:
      return TheoremId::T2_4;
    case TargetTag::K33:
      return TheoremId::T3_1;
    case TargetTag::K6minusC6:
      return TheoremId::T3_2;
    case TargetTag::Custom:
      break;
  }
  throw Error(ErrorKind::Domain, "no characterization for a custom target");
}

namespace {

// ---------------------------------------------------------------------------
// shape parsing
//
// All parametric shapes have the form: a few head terms followed by runs of
// fixed values in strictly decreasing order, e.g. (d1, d2, 3^4, 2^t, 1^...).
// Because pi is sorted, the decomposition is positional: the heads are the
// leading terms and each run's length can be read off directly. A head equal
// to the first run value ("d2 = 3 absorbing into the 3-run") changes nothing:
// every multiset decomposition yields the same numeric bindings.

struct RunSpec {
  int value;
  int fixed_count;  // -1: flexible, length derived from pi
};

std::optional<std::vector<int>> parse_head_runs(const std::vector<int>& d, int heads,
                                                std::initializer_list<RunSpec> runs) {
  const int n = static_cast<int>(d.size());
  if (n < heads) return std::nullopt;
  int pos = heads;
  std::vector<int> counts;
  counts.reserve(runs.size());
  for (const RunSpec& run : runs) {
    int c = 0;
    if (run.fixed_count >= 0) {
      for (; c < run.fixed_count; ++c) {
        if (pos >= n || d[static_cast<size_t>(pos)] != run.value) return std::nullopt;
        ++pos;
      }
    } else {
      while (pos < n && d[static_cast<size_t>(pos)] == run.value) {
        ++pos;
        ++c;
      }
    }
    counts.push_back(c);
  }
  if (pos != n) return std::nullopt;
  return counts;
}

std::vector<int> expand(std::initializer_list<std::pair<int, int>> value_counts) {
  std::vector<int> out;
  for (auto [value, count] : value_counts)
    out.insert(out.end(), static_cast<size_t>(count), value);
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

// ---------------------------------------------------------------------------
// literal exception lists, in printed order (1-based entries)

using EntryFn = std::optional<std::vector<int>> (*)(int n);

std::optional<std::vector<int>> fixed_entry(int n, int want_n, std::initializer_list<std::pair<int, int>> vc) {
  if (n != want_n) return std::nullopt;
  return expand(vc);
}

// T2.3 condition (3)
constexpr int kT23EntryCount = 5;
const EntryFn kT23Entries[kT23EntryCount] = {
    [](int n) { return fixed_entry(n, 6, {{3, 2}, {2, 4}}); },
    [](int n) { return fixed_entry(n, 7, {{3, 2}, {2, 5}}); },
    [](int n) { return fixed_entry(n, 6, {{4, 3}, {2, 3}}); },
    [](int n) -> std::optional<std::vector<int>> {
      if (n < 6) return std::nullopt;
      return expand({{n - 1, 1}, {3, 5}, {1, n - 6}});
    },
    [](int n) -> std::optional<std::vector<int>> {
      if (n < 7) return std::nullopt;
      return expand({{n - 1, 1}, {3, 6}, {1, n - 7}});
    },
};

// T2.4 condition (4)
constexpr int kT24EntryCount = 2;
const EntryFn kT24Entries[kT24EntryCount] = {
    [](int n) { return fixed_entry(n, 6, {{3, 2}, {2, 4}}); },
    [](int n) { return fixed_entry(n, 7, {{3, 2}, {2, 5}}); },
};

// T3.1 condition (9)
constexpr int kT31EntryCount = 22;
const EntryFn kT31Entries[kT31EntryCount] = {
    [](int n) { return fixed_entry(n, 7, {{5, 4}, {3, 2}, {2, 1}}); },
    [](int n) { return fixed_entry(n, 6, {{4, 6}}); },
    [](int n) { return fixed_entry(n, 7, {{3, 6}, {2, 1}}); },
    [](int n) { return fixed_entry(n, 8, {{6, 4}, {3, 4}}); },
    [](int n) { return fixed_entry(n, 8, {{4, 2}, {3, 6}}); },
    [](int n) { return fixed_entry(n, 8, {{4, 1}, {3, 6}, {2, 1}}); },
    [](int n) { return fixed_entry(n, 8, {{3, 6}, {2, 2}}); },
    [](int n) { return fixed_entry(n, 8, {{3, 8}}); },
    [](int n) { return fixed_entry(n, 8, {{3, 7}, {1, 1}}); },
    [](int n) { return fixed_entry(n, 9, {{4, 1}, {3, 8}}); },
    [](int n) { return fixed_entry(n, 9, {{4, 1}, {3, 7}, {1, 1}}); },
    [](int n) { return fixed_entry(n, 9, {{3, 8}, {2, 1}}); },
    [](int n) { return fixed_entry(n, 9, {{3, 7}, {2, 1}, {1, 1}}); },
    [](int n) { return fixed_entry(n, 10, {{3, 9}, {1, 1}}); },
    [](int n) { return fixed_entry(n, 10, {{3, 8}, {1, 2}}); },
    [](int n) -> std::optional<std::vector<int>> {
      if (n < 7) return std::nullopt;
      return expand({{n - 1, 1}, {4, 2}, {3, 4}, {1, n - 7}});
    },
    [](int n) -> std::optional<std::vector<int>> {
      if (n < 8) return std::nullopt;
      return expand({{n - 1, 1}, {4, 2}, {3, 5}, {1, n - 8}});
    },
    [](int n) -> std::optional<std::vector<int>> {
      if (n < 7) return std::nullopt;
      return expand({{n - 1, 1}, {5, 3}, {3, 3}, {1, n - 7}});
    },
    [](int n) -> std::optional<std::vector<int>> {
      if (n < 7) return std::nullopt;
      return expand({{n - 2, 1}, {4, 1}, {3, 5}, {1, n - 7}});
    },
    [](int n) -> std::optional<std::vector<int>> {
      if (n < 8) return std::nullopt;
      return expand({{n - 2, 1}, {4, 1}, {3, 6}, {1, n - 8}});
    },
    [](int n) -> std::optional<std::vector<int>> {
      if (n < 7) return std::nullopt;
      return expand({{n - 3, 1}, {3, 6}, {1, n - 7}});
    },
    [](int n) -> std::optional<std::vector<int>> {
      if (n < 8) return std::nullopt;
      return expand({{n - 3, 1}, {3, 7}, {1, n - 8}});
    },
};

// T3.2 condition (9)
constexpr int kT32EntryCount = 18;
const EntryFn kT32Entries[kT32EntryCount] = {
    [](int n) { return fixed_entry(n, 7, {{3, 6}, {2, 1}}); },
    [](int n) { return fixed_entry(n, 8, {{4, 2}, {3, 6}}); },
    [](int n) { return fixed_entry(n, 8, {{4, 1}, {3, 6}, {2, 1}}); },
    [](int n) { return fixed_entry(n, 8, {{3, 6}, {2, 2}}); },
    [](int n) { return fixed_entry(n, 8, {{3, 8}}); },
    [](int n) { return fixed_entry(n, 8, {{3, 7}, {1, 1}}); },
    [](int n) { return fixed_entry(n, 9, {{4, 1}, {3, 8}}); },
    [](int n) { return fixed_entry(n, 9, {{4, 1}, {3, 7}, {1, 1}}); },
    [](int n) { return fixed_entry(n, 9, {{3, 8}, {2, 1}}); },
    [](int n) { return fixed_entry(n, 9, {{3, 7}, {2, 1}, {1, 1}}); },
    [](int n) { return fixed_entry(n, 10, {{3, 9}, {1, 1}}); },
    [](int n) { return fixed_entry(n, 10, {{3, 8}, {1, 2}}); },
    [](int n) -> std::optional<std::vector<int>> {
      if (n < 7) return std::nullopt;
      return expand({{n - 1, 1}, {4, 2}, {3, 4}, {1, n - 7}});
    },
    [](int n) -> std::optional<std::vector<int>> {
      if (n < 8) return std::nullopt;
      return expand({{n - 1, 1}, {4, 2}, {3, 5}, {1, n - 8}});
    },
    [](int n) -> std::optional<std::vector<int>> {
      if (n < 7) return std::nullopt;
      return expand({{n - 2, 1}, {4, 1}, {3, 5}, {1, n - 7}});
    },
    [](int n) -> std::optional<std::vector<int>> {
      if (n < 8) return std::nullopt;
      return expand({{n - 2, 1}, {4, 1}, {3, 6}, {1, n - 8}});
    },
    [](int n) -> std::optional<std::vector<int>> {
      if (n < 7) return std::nullopt;
      return expand({{n - 3, 1}, {3, 6}, {1, n - 7}});
    },
    [](int n) -> std::optional<std::vector<int>> {
      if (n < 8) return std::nullopt;
      return expand({{n - 3, 1}, {3, 7}, {1, n - 8}});
    },
};

struct EntryTable {
  const EntryFn* entries;
  int count;
  int list_condition;  // printed condition carrying the list
};

EntryTable entry_table(TheoremId id) {
  switch (id) {
    case TheoremId::T2_3:
      return {kT23Entries, kT23EntryCount, 3};
    case TheoremId::T2_4:
      return {kT24Entries, kT24EntryCount, 4};
    case TheoremId::T3_1:
      return {kT31Entries, kT31EntryCount, 9};
    case TheoremId::T3_2:
      return {kT32Entries, kT32EntryCount, 9};
  }
  throw Error(ErrorKind::Invalid, "bad theorem id");
}

std::vector<int> matching_entries(const DegreeSequence& pi, TheoremId id) {
  EntryTable table = entry_table(id);
  std::vector<int> hits;
  for (int e = 1; e <= table.count; ++e) {
    auto inst = table.entries[e - 1](pi.n());
    if (inst && *inst == pi.terms()) hits.push_back(e);
  }
  return hits;
}

// ---------------------------------------------------------------------------
// per-family matchers (bindings derived from pi, then range-checked)

// T2.4 (2): (n-1, k, 2^t, 1^{n-2-t}), k,t in {3,...,n-2}, k and t of
// different parities.
std::vector<Bindings> match_t24_c2(const DegreeSequence& pi) {
  const int n = pi.n();
  if (n < 3) return {};
  auto counts = parse_head_runs(pi.terms(), 2, {{2, -1}, {1, -1}});
  if (!counts) return {};
  const int t = (*counts)[0];
  const int k = pi.d(2);
  if (pi.d(1) != n - 1) return {};
  if (k < 3 || k > n - 2 || t < 3 || t > n - 2) return {};
  if ((k + t) % 2 == 0) return {};
  return {Bindings{{"k", k}, {"t", t}}};
}

// T2.4 (3): (n-k, k+i, 2^i, 1^{n-i-2}), i in {3,...,n-2k},
// k in {1,...,floor((n-1)/2)-1}.
std::vector<Bindings> match_t24_c3(const DegreeSequence& pi) {
  const int n = pi.n();
  if (n < 3) return {};
  auto counts = parse_head_runs(pi.terms(), 2, {{2, -1}, {1, -1}});
  if (!counts) return {};
  const int i = (*counts)[0];
  const int k = n - pi.d(1);
  if (i < 3) return {};
  if (k < 1 || k > (n - 1) / 2 - 1) return {};
  if (i > n - 2 * k) return {};
  if (pi.d(2) != k + i) return {};
  return {Bindings{{"i", i}, {"k", k}}};
}

// T3.1 (6), shape 1: (d1, d2, 3^4, 2^t, 1^{n-6-t}); shape 2:
// (d1, d2, 4^2, 3^2, 2^t, 1^{n-6-t}). Bindings carry d1, d2, t.
std::vector<Bindings> match_t31_c6(const DegreeSequence& pi, int shape) {
  auto counts = shape == 1 ? parse_head_runs(pi.terms(), 2, {{3, 4}, {2, -1}, {1, -1}})
                           : parse_head_runs(pi.terms(), 2, {{4, 2}, {3, 2}, {2, -1}, {1, -1}});
  if (!counts) return {};
  const int t = shape == 1 ? (*counts)[1] : (*counts)[2];
  return {Bindings{{"d1", pi.d(1)}, {"d2", pi.d(2)}, {"t", t}}};
}

// T3.1 (7): (d1, d2, 4, 3^4, 2^t, 1^{n-7-t}).
std::vector<Bindings> match_t31_c7(const DegreeSequence& pi) {
  auto counts = parse_head_runs(pi.terms(), 2, {{4, 1}, {3, 4}, {2, -1}, {1, -1}});
  if (!counts) return {};
  return {Bindings{{"d1", pi.d(1)}, {"d2", pi.d(2)}, {"t", (*counts)[2]}}};
}

// T3.1 (8): (n-i, k+i, 4^t, 2^{k-t}, 1^{n-2-k}) for t = 5, 6, with
// i in {1,...,floor((n-k)/2)} and k in {t,...,n-2i}. The two printed range
// constraints collapse to k + 2i <= n.
std::vector<Bindings> match_t31_c8(const DegreeSequence& pi) {
  const int n = pi.n();
  std::vector<Bindings> out;
  for (int t : {5, 6}) {
    auto counts = parse_head_runs(pi.terms(), 2, {{4, t}, {2, -1}, {1, -1}});
    if (!counts) continue;
    const int k = t + (*counts)[1];
    const int i = n - pi.d(1);
    if (i < 1 || k + 2 * i > n) continue;
    if (pi.d(2) != k + i) continue;
    if ((*counts)[2] != n - 2 - k) continue;  // always holds; kept as a guard
    out.push_back(Bindings{{"i", i}, {"k", k}, {"t", t}});
  }
  return out;
}

// T3.2 (6): (d1, d2, d3, 3^k, 2^t, 1^{n-3-k-t}). k and t may be zero; the
// printed shape states no lower bounds, and for any sequence with d6 >= 3 a
// match forces k >= 3 anyway.
std::vector<Bindings> match_t32_c6(const DegreeSequence& pi) {
  auto counts = parse_head_runs(pi.terms(), 3, {{3, -1}, {2, -1}, {1, -1}});
  if (!counts) return {};
  return {Bindings{{"d1", pi.d(1)}, {"d2", pi.d(2)}, {"d3", pi.d(3)}, {"k", (*counts)[0]}, {"t", (*counts)[1]}}};
}

// T3.2 (7): (d1, d2, 3^4, 2^t, 1^{n-6-t}).
std::vector<Bindings> match_t32_c7(const DegreeSequence& pi) {
  auto counts = parse_head_runs(pi.terms(), 2, {{3, 4}, {2, -1}, {1, -1}});
  if (!counts) return {};
  return {Bindings{{"d1", pi.d(1)}, {"d2", pi.d(2)}, {"t", (*counts)[1]}}};
}

// T3.2 (8): (n-i, k, t, 3^t, 2^{k-i-t-1}, 1^{n-2-k+i}) with
// i in {1,...,floor((n-t-1)/2)}, k in {i+t+1,...,n-i}, t in {4,...,k-i-1}.
std::vector<Bindings> match_t32_c8(const DegreeSequence& pi) {
  const int n = pi.n();
  if (n < 3) return {};
  const int t = pi.d(3);
  if (t < 4) return {};
  auto counts = parse_head_runs(pi.terms(), 3, {{3, t}, {2, -1}, {1, -1}});
  if (!counts) return {};
  const int k = pi.d(2);
  const int i = k - t - 1 - (*counts)[1];  // from the 2-run length k-i-t-1
  if (i < 1 || 2 * i > n - t - 1) return {};
  if (pi.d(1) != n - i) return {};
  if (k < i + t + 1 || k > n - i) return {};
  return {Bindings{{"i", i}, {"k", k}, {"t", t}}};
}

// ---------------------------------------------------------------------------
// predicates

void require_predicate_domain(const DegreeSequence& pi, int min_n, std::string_view what) {
  if (pi.n() < min_n)
    throw Error(ErrorKind::Domain, std::string(what) + " needs n >= " + std::to_string(min_n) +
                                       ", got n = " + std::to_string(pi.n()));
  if (!pi.all_positive())
    throw Error(ErrorKind::Domain, std::string(what) + " applies to sequences without zero terms");
  if (!is_graphic(pi))
    throw Error(ErrorKind::Domain, std::string(what) + " applies to graphic sequences; " + pi.format() +
                                       " is not graphic");
}

struct VerdictBuilder {
  TheoremId theorem;
  PotentialVerdict verdict;

  void violate(int condition, Bindings bindings = {}) {
    verdict.potential = false;
    verdict.violated.push_back(ConditionId{theorem, condition, std::move(bindings)});
  }

  void violate_entries(const DegreeSequence& pi, int condition) {
    for (int e : matching_entries(pi, theorem)) violate(condition, Bindings{{"entry", e}});
  }
};

}  // namespace

PotentialVerdict is_potentially_k23(const DegreeSequence& pi) {
  require_predicate_domain(pi, 5, "the K_{2,3} characterization");
  const int n = pi.n();
  VerdictBuilder vb{TheoremId::T2_3};

  if (!(pi.d(2) >= 3 && pi.d(5) >= 2)) vb.violate(1);
  if (pi.d(1) == n - 1 && pi.d(2) == 3 && pi.d(5) != 3) vb.violate(2);
  vb.violate_entries(pi, 3);
  return vb.verdict;
}

PotentialVerdict is_potentially_k5p4(const DegreeSequence& pi) {
  require_predicate_domain(pi, 5, "the K_5-P_4 characterization");
  VerdictBuilder vb{TheoremId::T2_4};

  if (!(pi.d(2) >= 3 && pi.d(5) >= 2)) vb.violate(1);
  for (Bindings& b : match_t24_c2(pi)) vb.violate(2, std::move(b));
  for (Bindings& b : match_t24_c3(pi)) vb.violate(3, std::move(b));
  vb.violate_entries(pi, 4);
  return vb.verdict;
}

PotentialVerdict is_potentially_k33(const DegreeSequence& pi) {
  require_predicate_domain(pi, 6, "the K_{3,3} characterization");
  const int n = pi.n();
  VerdictBuilder vb{TheoremId::T3_1};

  // (1)
  if (pi.d(6) < 3) vb.violate(1);
  // (2)
  for (int i : {1, 2})
    if (pi.d(1) == n - i && pi.d(4 - i) < 4) vb.violate(2, Bindings{{"i", i}});
  // (3)
  if (pi.d(2) == n - 1 && !(pi.d(3) >= 5 || pi.d(6) >= 4)) vb.violate(3);
  // (4), (5): i is pinned by d1 + d2 = 2n - i
  {
    const long long i = 2LL * n - (pi.d(1) + pi.d(2));
    if (i >= 3 && i <= n - 4 && pi.d(static_cast<int>(n - i + 3)) == 1 && !(pi.d(3) >= 5 || pi.d(6) >= 4))
      vb.violate(4, Bindings{{"i", static_cast<int>(i)}});
    if (i >= 4 && i <= n - 3 && pi.d(static_cast<int>(n - i + 4)) == 1 && pi.d(3) < 4)
      vb.violate(5, Bindings{{"i", static_cast<int>(i)}});
  }
  // (6)
  for (int shape : {1, 2})
    for (Bindings& b : match_t31_c6(pi, shape))
      if (pi.d(1) + pi.d(2) > n + b.at("t") + 2) {
        b.emplace("shape", shape);
        vb.violate(6, std::move(b));
      }
  // (7)
  for (Bindings& b : match_t31_c7(pi))
    if (pi.d(1) + pi.d(2) > n + b.at("t") + 3) vb.violate(7, std::move(b));
  // (8)
  for (Bindings& b : match_t31_c8(pi)) vb.violate(8, std::move(b));
  // (9)
  vb.violate_entries(pi, 9);
  return vb.verdict;
}

PotentialVerdict is_potentially_k6c6(const DegreeSequence& pi) {
  require_predicate_domain(pi, 6, "the K_6-C_6 characterization");
  const int n = pi.n();
  VerdictBuilder vb{TheoremId::T3_2};

  // (1)
  if (pi.d(6) < 3) vb.violate(1);
  // (2)
  for (int i : {1, 2})
    if (pi.d(1) == n - i && pi.d(4 - i) < 4) vb.violate(2, Bindings{{"i", i}});
  // (3)
  if (pi.d(2) == n - 1 && pi.d(4) < 4) vb.violate(3);
  // (4), (5)
  {
    const long long i = 2LL * n - (pi.d(1) + pi.d(2));
    if (i >= 3 && i <= n - 4 && pi.d(static_cast<int>(n - i + 3)) == 1 && pi.d(4) < 4)
      vb.violate(4, Bindings{{"i", static_cast<int>(i)}});
    if (i >= 4 && i <= n - 3 && pi.d(static_cast<int>(n - i + 4)) == 1 && pi.d(3) < 4)
      vb.violate(5, Bindings{{"i", static_cast<int>(i)}});
  }
  // (6)
  for (Bindings& b : match_t32_c6(pi))
    if (pi.d(1) + pi.d(2) + pi.d(3) > n + 2 * b.at("k") + b.at("t") + 1) vb.violate(6, std::move(b));
  // (7)
  for (Bindings& b : match_t32_c7(pi))
    if (pi.d(1) + pi.d(2) > n + b.at("t") + 2) vb.violate(7, std::move(b));
  // (8)
  for (Bindings& b : match_t32_c8(pi)) vb.violate(8, std::move(b));
  // (9)
  vb.violate_entries(pi, 9);
  return vb.verdict;
}

PotentialVerdict check_potential(const DegreeSequence& pi, const TargetPattern& target) {
  switch (target.tag) {
    case TargetTag::K23:
      return is_potentially_k23(pi);
    case TargetTag::K5minusP4:
      return is_potentially_k5p4(pi);
    case TargetTag::K33:
      return is_potentially_k33(pi);
    case TargetTag::K6minusC6:
      return is_potentially_k6c6(pi);
    case TargetTag::Custom:
      break;
  }
  throw Error(ErrorKind::Domain, "no characterization predicate for a custom target");
}

int exception_entry_count(TheoremId id) { return entry_table(id).count; }

std::optional<DegreeSequence> exception_entry_at(TheoremId id, int entry, int n) {
  EntryTable table = entry_table(id);
  if (entry < 1 || entry > table.count)
    throw Error(ErrorKind::Invalid, "exception entry " + std::to_string(entry) + " out of range");
  auto inst = table.entries[entry - 1](n);
  if (!inst) return std::nullopt;
  return DegreeSequence(std::move(*inst));
}

namespace {

std::vector<Bindings> match_entries_family(const DegreeSequence& pi, TheoremId id, int variant) {
  EntryTable table = entry_table(id);
  std::vector<Bindings> out;
  if (variant == 0) {
    for (int e : matching_entries(pi, id)) out.push_back(Bindings{{"entry", e}});
    return out;
  }
  if (variant < 1 || variant > table.count)
    throw Error(ErrorKind::Invalid, "exception entry " + std::to_string(variant) + " out of range");
  auto inst = table.entries[variant - 1](pi.n());
  if (inst && *inst == pi.terms()) out.push_back(Bindings{});
  return out;
}

}  // namespace

std::vector<Bindings> match_exceptional_family(const DegreeSequence& pi, const FamilyRef& family) {
  const int v = family.variant;
  auto single_variant = [&](std::vector<Bindings> (*fn)(const DegreeSequence&)) {
    if (v > 1) throw Error(ErrorKind::Invalid, "condition has a single shape");
    return fn(pi);
  };

  switch (family.theorem) {
    case TheoremId::T2_3:
      if (family.condition == 3) return match_entries_family(pi, TheoremId::T2_3, v);
      break;
    case TheoremId::T2_4:
      if (family.condition == 2) return single_variant(match_t24_c2);
      if (family.condition == 3) return single_variant(match_t24_c3);
      if (family.condition == 4) return match_entries_family(pi, TheoremId::T2_4, v);
      break;
    case TheoremId::T3_1:
      if (family.condition == 6) {
        if (v == 0) {
          std::vector<Bindings> out;
          for (int shape : {1, 2})
            for (Bindings& b : match_t31_c6(pi, shape)) {
              b.emplace("shape", shape);
              out.push_back(std::move(b));
            }
          return out;
        }
        if (v == 1 || v == 2) return match_t31_c6(pi, v);
        throw Error(ErrorKind::Invalid, "condition (6) has shapes 1 and 2");
      }
      if (family.condition == 7) return single_variant(match_t31_c7);
      if (family.condition == 8) return single_variant(match_t31_c8);
      if (family.condition == 9) return match_entries_family(pi, TheoremId::T3_1, v);
      break;
    case TheoremId::T3_2:
      if (family.condition == 6) return single_variant(match_t32_c6);
      if (family.condition == 7) return single_variant(match_t32_c7);
      if (family.condition == 8) return single_variant(match_t32_c8);
      if (family.condition == 9) return match_entries_family(pi, TheoremId::T3_2, v);
      break;
  }
  throw Error(ErrorKind::Invalid, "no parametric family for condition " + std::to_string(family.condition) +
                                      " of " + std::string(theorem_label(family.theorem)));
}

}  // namespace potent
