#include "potent/verify.hpp"

#include <atomic>
#include <thread>

namespace potent {

VerificationReport verify_range(const TargetPattern& target, int n_min, int n_max, int workers,
                                int max_vertices) {
  if (target.tag == TargetTag::Custom)
    throw Error(ErrorKind::Domain, "verification needs a named target");
  if (n_min < target.min_n() || n_min > n_max)
    throw Error(ErrorKind::Domain, "bad n range [" + std::to_string(n_min) + ", " + std::to_string(n_max) + "]");
  if (n_max > max_vertices)
    throw Error(ErrorKind::Cap, "n_max " + std::to_string(n_max) + " exceeds the oracle cap " +
                                    std::to_string(max_vertices));
  if (workers < 1) workers = 1;

  const auto start = std::chrono::steady_clock::now();

  std::vector<DegreeSequence> sequences;
  for (int n = n_min; n <= n_max; ++n) {
    GraphicSequenceStream stream(n, /*positive_only=*/true);
    while (auto pi = stream.next()) sequences.push_back(std::move(*pi));
  }

  struct Outcome {
    bool agree = true;
    PotentialVerdict verdict;
    OracleResult oracle;
  };
  std::vector<Outcome> outcomes(sequences.size());
  std::atomic<size_t> cursor{0};

  auto work = [&]() {
    for (;;) {
      const size_t idx = cursor.fetch_add(1);
      if (idx >= sequences.size()) return;
      const DegreeSequence& pi = sequences[idx];
      Outcome& out = outcomes[idx];
      out.verdict = check_potential(pi, target);
      out.oracle = oracle_potential(pi, target, OracleMode::Exhaustive, max_vertices);
      out.agree = out.verdict.potential == out.oracle.witness.has_value();
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  VerificationReport report;
  report.target = target;
  report.n_min = n_min;
  report.n_max = n_max;
  report.sequences_tested = static_cast<long long>(sequences.size());
  for (size_t i = 0; i < sequences.size(); ++i) {
    if (outcomes[i].agree) {
      ++report.agreements;
    } else {
      report.mismatches.push_back(
          VerifyMismatch{sequences[i], std::move(outcomes[i].verdict), std::move(outcomes[i].oracle)});
    }
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace potent
