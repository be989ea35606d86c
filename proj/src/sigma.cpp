#include "potent/sigma.hpp"

#include <limits>

#include "potent/characterize.hpp"

namespace potent {

std::string_view sigma_method_name(SigmaMethod method) {
  return method == SigmaMethod::Predicate ? "predicate" : "oracle";
}

SigmaResult sigma_value(const TargetPattern& target, int n, SigmaMethod method, int max_vertices) {
  if (n < target.min_n())
    throw Error(ErrorKind::Domain, "sigma needs n >= " + std::to_string(target.min_n()));
  if (method == SigmaMethod::Predicate && target.tag == TargetTag::Custom)
    throw Error(ErrorKind::Domain, "predicate method needs a named target");
  if (method == SigmaMethod::Oracle && n > max_vertices)
    throw Error(ErrorKind::Cap, "oracle method capped at " + std::to_string(max_vertices) + " vertices");

  SigmaResult result;
  result.target = target;
  result.n = n;
  result.method = method;

  long long best = -1;
  long long min_sigma = std::numeric_limits<long long>::max();
  GraphicSequenceStream stream(n, /*positive_only=*/true);
  while (auto pi = stream.next()) {
    ++result.sequences_scanned;
    min_sigma = std::min(min_sigma, pi->sigma());
    const bool potential = method == SigmaMethod::Predicate
                               ? check_potential(*pi, target).potential
                               : oracle_potential(*pi, target, OracleMode::Exhaustive, max_vertices)
                                     .witness.has_value();
    // stream is lexicographically decreasing, so on ties the first maximizer
    // seen is the lexicographically largest
    if (!potential && pi->sigma() > best) {
      best = pi->sigma();
      result.extremal = *pi;
    }
  }

  if (best < 0) {
    result.degenerate = true;
    result.sigma = result.sequences_scanned > 0 ? min_sigma : 0;
  } else {
    result.sigma = best + 2;
  }
  return result;
}

DegreeSequence extremal_sequence(const TargetPattern& target, int n) {
  std::vector<int> terms;
  switch (target.tag) {
    case TargetTag::K33: {
      if (n < 11) throw Error(ErrorKind::Domain, "the K_{3,3} extremal construction needs n >= 11");
      terms.assign(2, n - 1);
      terms.insert(terms.end(), 3, 4);
      if (n % 2 == 1) {
        terms.insert(terms.end(), static_cast<size_t>(n - 5), 3);
      } else {
        terms.insert(terms.end(), static_cast<size_t>(n - 6), 3);
        terms.push_back(2);
      }
      return DegreeSequence(std::move(terms));
    }
    case TargetTag::K6minusC6: {
      if (n < 6) throw Error(ErrorKind::Domain, "the K_6-C_6 extremal construction needs n >= 6");
      terms.assign(3, n - 1);
      terms.insert(terms.end(), static_cast<size_t>(n - 3), 3);
      return DegreeSequence(std::move(terms));
    }
    default:
      throw Error(ErrorKind::Domain, "no extremal construction for this target");
  }
}

std::optional<long long> sigma_closed_form(TargetTag tag, int n) {
  switch (tag) {
    case TargetTag::K33:
      if (n < 11) return std::nullopt;
      return n % 2 == 1 ? 5LL * n - 3 : 5LL * n - 4;
    case TargetTag::K6minusC6:
      if (n < 6) return std::nullopt;
      return 6LL * n - 10;
    default:
      return std::nullopt;
  }
}

FormulaCheck check_sigma_formula(const TargetPattern& target, int n, SigmaMethod method, int max_vertices) {
  FormulaCheck check;
  check.computed = sigma_value(target, n, method, max_vertices);
  if (auto formula = sigma_closed_form(target.tag, n)) {
    check.formula_defined = true;
    check.formula_value = *formula;
    check.matches = check.computed.sigma == *formula;
  }
  return check;
}

}  // namespace potent
