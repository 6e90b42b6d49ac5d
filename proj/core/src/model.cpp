#include "ar1lt/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ar1lt/error.hpp"

namespace ar1lt {

ModelParams::ModelParams(double theta, double m) : theta_(theta), m_(m) {
  if (!std::isfinite(theta) || !std::isfinite(m) || theta == 0.0 ||
      std::abs(theta) >= 1.0) {
    std::ostringstream os;
    os << "invalid model parameters: need 0 < |theta| < 1 and finite m, got theta="
       << theta << ", m=" << m;
    throw Error(Errc::invalid_parameter, os.str());
  }
}

double ModelParams::stationary_variance() const noexcept {
  return 1.0 / (1.0 - theta_ * theta_);
}

double NormalStream::operator()() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  constexpr double kScale = 0x1.0p-53;
  const double u1 = static_cast<double>((engine_() >> 11) + 1) * kScale;
  const double u2 = static_cast<double>(engine_() >> 11) * kScale;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double ConditionalPath::sum_of_squares() const noexcept {
  double s = 0.0;
  for (double v : values) s += v * v;
  return s;
}

ConditionalPath simulate_conditional(const ModelParams& params, double x,
                                     std::size_t t, std::uint64_t seed) {
  ConditionalPath path;
  path.x0 = x;
  path.seed = seed;
  path.values.reserve(t + 1);
  path.values.push_back(x);
  NormalStream normal(seed);
  double current = x;
  for (std::size_t s = 1; s <= t; ++s) {
    current = step(params, current, normal());
    path.values.push_back(current);
  }
  return path;
}

double conditional_mean(const ModelParams& params, double x, std::size_t s) {
  // theta^s by repeated multiplication, matching the recursion's rounding
  // pattern on the deviation x - m.
  double deviation = x - params.m();
  for (std::size_t k = 0; k < s; ++k) deviation *= params.theta();
  return params.m() + deviation;
}

Eigen::VectorXd conditional_mean_vector(const ModelParams& params, double x,
                                        std::size_t t) {
  Eigen::VectorXd mean(static_cast<Eigen::Index>(t));
  double deviation = x - params.m();
  for (Eigen::Index s = 0; s < mean.size(); ++s) {
    deviation *= params.theta();
    mean(s) = params.m() + deviation;
  }
  return mean;
}

Eigen::MatrixXd conditional_covariance(const ModelParams& params, std::size_t t) {
  const auto n = static_cast<Eigen::Index>(t);
  const double theta = params.theta();
  const double theta2 = theta * theta;

  // Var(X_s | X_0) = (1 - theta^(2s)) / (1 - theta^2), then geometric decay
  // off the diagonal.
  Eigen::MatrixXd cov(n, n);
  double theta2_pow = 1.0;
  for (Eigen::Index s = 0; s < n; ++s) {
    theta2_pow *= theta2;
    const double variance = (1.0 - theta2_pow) / (1.0 - theta2);
    cov(s, s) = variance;
    double decay = 1.0;
    for (Eigen::Index u = s + 1; u < n; ++u) {
      decay *= theta;
      cov(s, u) = decay * variance;
      cov(u, s) = cov(s, u);
    }
  }
  return cov;
}

}  // namespace ar1lt
