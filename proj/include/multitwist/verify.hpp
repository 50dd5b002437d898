#pragma once

// Batch verification of the structural results over an enumerated family of
// curve systems.  Every check compares two independently computed answers
// or tests a stated inequality; a failing instance is recorded as a
// counterexample in the canonical text format.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multitwist/enumerate.hpp"

namespace multitwist {

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Exponents are drawn from [-exponent_bound, exponent_bound].
  int exponent_bound = 2;
  /// Graphs with at most this many edges get every exponent vector.
  std::size_t exhaustive_max_edges = 4;
  /// Otherwise this many uniform samples plus as many samples projected
  /// onto the Torelli subgroup.
  std::size_t random_samples = 100;
  /// Stop (and flag the report incomplete) once exceeded.
  std::optional<double> budget_seconds;
  std::size_t max_counterexamples = 5;
};

struct CheckResult {
  std::string name;
  std::string statement;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> counterexamples;

  bool ok() const { return failed == 0; }
};

struct VerificationReport {
  EnumSpec spec;
  std::vector<CheckResult> checks;
  std::size_t graphs = 0;
  std::size_t twist_pairs = 0;
  double seconds = 0;
  bool complete = true;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

VerificationReport verify_theorems(const EnumSpec& spec, const VerifyOptions& options = {});

/// Runs the per-graph checks on a single graph of the given mode and folds
/// them into `report` (used by verify_theorems; exposed for tests).
void verify_graph(const SurfaceGraph& g, const VerifyOptions& options, std::uint64_t stream,
                  VerificationReport& report);

}  // namespace multitwist
