#pragma once

// Predicate-vs-oracle verification campaign: every positive graphic sequence
// in an n range is checked both ways and disagreements are collected with
// their certificates. The report is deterministic for any worker count.

#include <chrono>

#include "potent/characterize.hpp"
#include "potent/oracle.hpp"

namespace potent {

struct VerifyMismatch {
  DegreeSequence sequence;
  PotentialVerdict predicate_verdict;
  OracleResult oracle_result;
};

struct VerificationReport {
  TargetPattern target;
  int n_min = 0;
  int n_max = 0;
  long long sequences_tested = 0;
  long long agreements = 0;
  std::vector<VerifyMismatch> mismatches;
  std::chrono::milliseconds elapsed{0};
};

VerificationReport verify_range(const TargetPattern& target, int n_min, int n_max, int workers = 1,
                                int max_vertices = kDefaultOracleCap);

}  // namespace potent
