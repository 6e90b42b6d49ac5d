#include "ar1lt/quadrature.hpp"

#include <algorithm>

#include <Eigen/Eigenvalues>

#include "ar1lt/error.hpp"

namespace ar1lt {

namespace {
constexpr double kRescaleAt = 1e150;
const double kLogRescale = std::log(kRescaleAt);
}  // namespace

GaussHermiteRule gauss_hermite(std::size_t order) {
  if (order == 0) throw Error(Errc::invalid_parameter, "Gauss-Hermite order must be >= 1");

  const auto n = static_cast<int>(order);
  const double pi_m4 = 1.0 / std::pow(std::numbers::pi, 0.25);
  const int half = (n + 1) / 2;
  GaussHermiteRule rule;
  rule.nodes.assign(order, 0.0);
  rule.weights.assign(order, 0.0);

  // Starting points: eigenvalues of the symmetric Jacobi matrix (zero
  // diagonal, off-diagonal sqrt(k/2)). Newton on the recurrence then polishes
  // each node and yields its weight.
  Eigen::VectorXd diagonal = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off_diagonal(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) off_diagonal(k - 1) = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> jacobi;
  jacobi.computeFromTridiagonal(diagonal, off_diagonal, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& guesses = jacobi.eigenvalues();  // ascending

  for (int i = 0; i < half; ++i) {
    double z = guesses(n - 1 - i);
    // Orthonormal Hermite recurrence, rescaled whenever it grows large;
    // log_scale tracks the factor removed so far.
    double derivative = 0.0;
    double log_scale = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = pi_m4;
      double p2 = 0.0;
      log_scale = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt(static_cast<double>(j - 1) / j) * p3;
        if (std::abs(p1) > kRescaleAt) {
          p1 /= kRescaleAt;
          p2 /= kRescaleAt;
          log_scale += kLogRescale;
        }
      }
      derivative = std::sqrt(2.0 * n) * p2;
      const double previous = z;
      z = previous - p1 / derivative;
      if (std::abs(z - previous) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    const double weight =
        std::exp(std::log(2.0) - 2.0 * std::log(std::abs(derivative)) - 2.0 * log_scale);
    rule.nodes[i] = z;
    rule.nodes[n - 1 - i] = -z;
    rule.weights[i] = weight;
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;

  std::reverse(rule.nodes.begin(), rule.nodes.end());
  std::reverse(rule.weights.begin(), rule.weights.end());
  return rule;
}

}  // namespace ar1lt
