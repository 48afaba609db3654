#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zzosp/algebras_spec.hpp"
#include "zzosp/graded_matrix.hpp"

namespace zzosp {

inline constexpr std::size_t kDefaultMaxCounterexamples = 10;

struct Counterexample {
  std::string clause;           // sub-relation or check label; may be empty
  std::vector<long> indices;    // basis or generator indices (1-based)
  std::vector<int> signs;       // +1/-1 parameters, relation checks only
  GradedMatrix residual;        // LHS - RHS, or the offending matrix
};

/// One line of a per-item adjudication (used by the block-condition check).
struct CheckDetail {
  std::string item;
  std::string status;
  std::string note;
};

/// Outcome of one identity-verification run. Failures are data.
struct CheckReport {
  std::string check;
  AlgebraSpec spec;
  std::size_t total = 0;
  std::size_t failed = 0;
  /// Number of instances the check promised to evaluate before running;
  /// equals total when nothing was skipped.
  std::size_t declared_total = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<CheckDetail> details;

  bool passed() const { return failed == 0 && total == declared_total; }

  /// Counts one instance; keeps the counterexample if room is left.
  void record(bool ok, std::size_t max_counterexamples, Counterexample&& cx);
  void record_pass() { ++total; }
};

}  // namespace zzosp
