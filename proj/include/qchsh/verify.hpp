#pragma once

// Randomized invariant suites behind the `verify` subcommand.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qchsh/representation.hpp"

namespace qchsh {

struct VerifyOptions {
  int min_dim = 2;
  int max_dim = 6;
  long trials = 1000;
  std::uint64_t seed = 1;
  /// Supplies the basis under test; defaults to build_gellmann_basis.
  std::function<GellMannBasis(int)> basis_factory;
};

struct SuiteReport {
  std::string name;
  long checks = 0;
  long failures = 0;
  double worst_violation = 0.0;  ///< largest amount by which a check missed

  bool passed() const { return failures == 0; }
};

/// orthogonality, lemma1, roundtrip, correlation-bound, ghz-closed-form,
/// bound-ordering.
const std::vector<std::string>& suite_names();

/// Throws InvalidInput for an unknown suite name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace qchsh
