#pragma once

// Characterization predicates for potentially H-graphic sequences, one per
// target: T2.3 (K_{2,3}), T2.4 (K_5-P_4), T3.1 (K_{3,3}), T3.2 (K_6-C_6).
// Each predicate evaluates every numbered condition of its characterization
// (no short-circuit) and reports all violations with the matched family
// parameters, so a verdict can be re-validated line by line.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "potent/graph.hpp"
#include "potent/sequence.hpp"

namespace potent {

enum class TheoremId { T2_3, T2_4, T3_1, T3_2 };

std::string_view theorem_label(TheoremId id);  // "T2.3", "T2.4", "T3.1", "T3.2"
TheoremId theorem_for_target(TargetTag tag);

// Parameter bindings of a matched condition. Keys used: "i", "k", "t",
// "d1", "d2", "d3", and "shape" / "entry" (1-based, printed order) for
// conditions with several shapes or a literal exception list.
using Bindings = std::map<std::string, int>;

struct ConditionId {
  TheoremId theorem;
  int condition;  // index as printed in the characterization
  Bindings bindings;
};

struct PotentialVerdict {
  bool potential = true;
  std::vector<ConditionId> violated;
};

// Preconditions for all four predicates: pi graphic, all terms >= 1 and
// n >= 5 (K_{2,3}, K_5-P_4) or n >= 6 (K_{3,3}, K_6-C_6); violations throw
// a Domain error.
PotentialVerdict is_potentially_k23(const DegreeSequence& pi);
PotentialVerdict is_potentially_k5p4(const DegreeSequence& pi);
PotentialVerdict is_potentially_k33(const DegreeSequence& pi);
PotentialVerdict is_potentially_k6c6(const DegreeSequence& pi);

// Dispatch on a named target; Custom targets have no characterization and
// throw a Domain error.
PotentialVerdict check_potential(const DegreeSequence& pi, const TargetPattern& target);

// A parametric (or literal) shape within a characterization condition.
// variant selects one shape when a condition prints several (1-based, in
// printed order; exception lists use the entry number); variant 0 matches
// all shapes of the condition and adds a "shape"/"entry" binding.
struct FamilyRef {
  TheoremId theorem;
  int condition;
  int variant = 0;
};

// Every parameter binding under which pi equals the referenced shape with
// the printed range constraints satisfied. Parameters are derived from pi
// (run lengths, head values) and range-checked. Empty when there is no match.
std::vector<Bindings> match_exceptional_family(const DegreeSequence& pi, const FamilyRef& family);

// Number of printed entries in a condition-(9)-style literal list (22 for
// T3.1, 18 for T3.2, 5 for T2.3's list, 2 for T2.4's).
int exception_entry_count(TheoremId id);

// The entry's sequence instantiated at a given n, when well formed there.
std::optional<DegreeSequence> exception_entry_at(TheoremId id, int entry, int n);

}  // namespace potent
