#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace ar1lt {

/// Nodes and weights for integrals against exp(-x^2) over the real line.
struct GaussHermiteRule {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // sum to sqrt(pi)
};

/// Gauss-Hermite rule of the given order (>= 1), found by Newton iteration on
/// the orthonormal Hermite three-term recurrence.
GaussHermiteRule gauss_hermite(std::size_t order);

/// E[f(Y)] for Y ~ N(mean, sd^2) by the rule.
template <class F>
auto normal_expectation(const GaussHermiteRule& rule, double mean, double sd, F&& f) {
  using Result = decltype(f(mean));
  Result acc{};
  const double scale = std::numbers::sqrt2 * sd;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(mean + scale * rule.nodes[i]);
  }
  return acc * (1.0 / std::sqrt(std::numbers::pi));
}

}  // namespace ar1lt
