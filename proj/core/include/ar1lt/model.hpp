#pragma once

// Shifted stationary AR(1) process
//
//   Y_t = theta * Y_{t-1} + e_t,   e_t ~ N(0, 1) i.i.d.,   X_t = Y_t + m,
//
// observed through the fixed functional F(x) = x^2. Everything downstream
// conditions on the start X_0 = x.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace ar1lt {

/// AR coefficient theta with 0 < |theta| < 1 and level shift m.
class ModelParams {
 public:
  /// Throws Error{Errc::invalid_parameter} unless 0 < |theta| < 1 and both
  /// values are finite.
  ModelParams(double theta, double m);

  double theta() const noexcept { return theta_; }
  double m() const noexcept { return m_; }

  /// Variance of the stationary law, 1 / (1 - theta^2).
  double stationary_variance() const noexcept;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  double theta_;
  double m_;
};

/// Standard normal stream with a fixed seed -> sequence mapping.
///
/// The engine is std::mt19937_64 constructed from the 64-bit seed (its output
/// sequence is fixed by the C++ standard). Each pair of engine outputs
/// (a, b) becomes u1 = ((a >> 11) + 1) * 2^-53 in (0, 1] and
/// u2 = (b >> 11) * 2^-53 in [0, 1); Box-Muller then yields
/// sqrt(-2 log u1) * cos(2 pi u2) followed by sqrt(-2 log u1) * sin(2 pi u2).
/// std::normal_distribution is avoided since its algorithm is
/// implementation-defined.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  double operator()();

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

/// splitmix64 finaliser applied to seed + index; used to give independent
/// streams to Monte Carlo shards.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

struct ConditionalPath {
  double x0 = 0.0;
  std::vector<double> values;  // X_0 .. X_t, values[0] == x0
  std::uint64_t seed = 0;

  std::size_t horizon() const noexcept { return values.empty() ? 0 : values.size() - 1; }
  /// S_t = sum of X_s^2 over the whole path.
  double sum_of_squares() const noexcept;
};

/// Draws X_1..X_t given X_0 = x, using innovations e_1..e_t taken in order
/// from NormalStream(seed).
ConditionalPath simulate_conditional(const ModelParams& params, double x,
                                     std::size_t t, std::uint64_t seed);

/// Advances a path in place: returns m + theta * (prev - m) + innovation.
inline double step(const ModelParams& params, double prev, double innovation) noexcept {
  return params.m() + params.theta() * (prev - params.m()) + innovation;
}

/// E[X_s | X_0 = x] = m + theta^s (x - m).
double conditional_mean(const ModelParams& params, double x, std::size_t s);

/// Conditional means for s = 1..t (index 0 of the result is s = 1).
Eigen::VectorXd conditional_mean_vector(const ModelParams& params, double x,
                                        std::size_t t);

/// Covariance of (X_1, ..., X_t) given X_0. Entry (s, u), 1-based, is
/// theta^|s-u| (1 - theta^(2 min(s,u))) / (1 - theta^2). t == 0 gives a 0x0
/// matrix. X_0 itself is deterministic and excluded.
Eigen::MatrixXd conditional_covariance(const ModelParams& params, std::size_t t);

}  // namespace ar1lt
