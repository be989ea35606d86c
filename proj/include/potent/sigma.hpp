#pragma once

// Brute-force sigma(H, n): the smallest even integer such that every n-term
// positive graphic sequence with at least that sum is potentially H-graphic,
// computed as 2 plus the largest sum over non-potential sequences.

#include <optional>

#include "potent/graph.hpp"
#include "potent/oracle.hpp"
#include "potent/sequence.hpp"

namespace potent {

enum class SigmaMethod { Predicate, Oracle };

std::string_view sigma_method_name(SigmaMethod method);

struct SigmaResult {
  TargetPattern target;
  int n = 0;
  long long sigma = 0;
  // Lexicographically largest non-potential sequence with sum sigma - 2;
  // absent in the degenerate case where every scanned sequence is potential
  // (sigma then reports the minimal scanned sum).
  std::optional<DegreeSequence> extremal;
  SigmaMethod method = SigmaMethod::Predicate;
  long long sequences_scanned = 0;
  bool degenerate = false;
};

SigmaResult sigma_value(const TargetPattern& target, int n, SigmaMethod method,
                        int max_vertices = kDefaultOracleCap);

// The known extremal construction: for K_{3,3} (n >= 11)
// ((n-1)^2, 4^3, 3^{n-5}) for odd n and ((n-1)^2, 4^3, 3^{n-6}, 2) for even n;
// for K_6-C_6 (n >= 6) ((n-1)^3, 3^{n-3}).
DegreeSequence extremal_sequence(const TargetPattern& target, int n);

// Closed form: K_{3,3} (n >= 11): 5n-3 odd / 5n-4 even; K_6-C_6 (n >= 6): 6n-10.
std::optional<long long> sigma_closed_form(TargetTag tag, int n);

struct FormulaCheck {
  bool formula_defined = false;  // false: no closed form is asserted at this n
  long long formula_value = 0;
  bool matches = false;
  SigmaResult computed;
};

FormulaCheck check_sigma_formula(const TargetPattern& target, int n,
                                 SigmaMethod method = SigmaMethod::Predicate,
                                 int max_vertices = kDefaultOracleCap);

}  // namespace potent
