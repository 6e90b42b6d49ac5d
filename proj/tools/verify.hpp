#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ar1lt::cli {

struct VerifyOptions {
  std::size_t grid_size = 50;            // alpha points per theta for spectral checks
  std::uint64_t seed = 20240601;         // Monte Carlo seed
  std::size_t mc_samples = 1000000;
  std::optional<double> tolerance;       // overrides every deterministic tolerance
  unsigned threads = 0;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst error (or |z|-score for Monte Carlo)
  double threshold = 0.0;
  std::string detail;
};

/// Runs the self-verification suite: root and symmetric-function identities,
/// Wronskian, recursion vs explicit Sigma, matrix and Monte Carlo oracles,
/// exactness anchors and the convergence-rate fit.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace ar1lt::cli
