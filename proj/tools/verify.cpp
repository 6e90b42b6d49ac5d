#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "ar1lt/ar1lt.hpp"

namespace ar1lt::cli {

namespace {

constexpr double kThetas[] = {-0.8, -0.3, 0.3, 0.6, 0.8};
constexpr double kShifts[] = {0.0, 1.5};
constexpr double kStarts[] = {-1.0, 0.0, 2.0};
constexpr double kAlphas[] = {-0.05, -0.5, -2.0};
constexpr std::size_t kHorizons[] = {1, 5, 50};

double rel_err(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Half real negative alphas spread over four decades, half complex with
// |Im alpha| <= 0.5; all in D.
std::vector<Complex> alpha_points(const ModelParams& params, std::size_t count) {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> log_mag(-3.0, 1.0);
  std::uniform_real_distribution<double> re(-3.0, 0.05);
  std::uniform_real_distribution<double> im(-0.5, 0.5);
  std::vector<Complex> out;
  while (out.size() < count) {
    const Complex alpha = out.size() % 2 == 0 ? Complex(-std::pow(10.0, log_mag(rng)), 0.0)
                                              : Complex(re(rng), im(rng));
    if (domain_check(params, TransformPoint(alpha))) out.push_back(alpha);
  }
  return out;
}

class Tracker {
 public:
  Tracker(std::string name, double threshold) : name_(std::move(name)), threshold_(threshold) {}

  void observe(double error, const std::string& where) {
    if (!(error <= worst_)) {
      worst_ = error;
      where_ = where;
    }
  }

  CheckResult finish() const {
    CheckResult out;
    out.name = name_;
    out.measured = worst_;
    out.threshold = threshold_;
    out.passed = worst_ <= threshold_;
    out.detail = where_.empty() ? "" : "worst at " + where_;
    return out;
  }

 private:
  std::string name_;
  double threshold_;
  double worst_ = 0.0;
  std::string where_;
};

std::string label(double theta, Complex alpha) {
  std::ostringstream os;
  os << "theta=" << theta << " alpha=" << alpha;
  return os.str();
}

CheckResult check_vieta(const VerifyOptions& o, double tol) {
  Tracker tracker("vieta", tol);
  for (double theta : kThetas) {
    const ModelParams p(theta, 0.0);
    for (Complex alpha : alpha_points(p, o.grid_size)) {
      const auto spec = roots(p, TransformPoint(alpha));
      const auto where = label(theta, alpha);
      tracker.observe(rel_err(spec.lambda_plus * spec.lambda_minus, theta * theta), where);
      tracker.observe(rel_err(spec.lambda_plus + spec.lambda_minus, -2.0 * alpha + theta * theta + 1.0),
                      where);
      tracker.observe(std::abs(spec.beta_plus + spec.beta_minus - 1.0), where);
    }
  }
  return tracker.finish();
}

CheckResult check_symmetric_functions(const VerifyOptions& o, double tol) {
  Tracker tracker("symmetric_functions", tol);
  for (double theta : kThetas) {
    const ModelParams p(theta, 0.0);
    const double lo = (1 - theta) * (1 - theta), hi = (1 + theta) * (1 + theta);
    for (Complex alpha : alpha_points(p, o.grid_size)) {
      const TransformPoint point(alpha);
      const Complex mu = point.mu();
      const auto spec = roots(p, point);
      const Complex z = spec.lambda_plus / theta, zi = spec.lambda_minus / theta;
      const auto where = label(theta, alpha);
      tracker.observe(rel_err(z + zi, (mu + theta * theta + 1.0) / theta), where);
      tracker.observe(rel_err((z - zi) * (z - zi), (mu + lo) * (mu + hi) / (theta * theta)), where);
      tracker.observe(rel_err(z + zi - 2.0, (mu + lo) / theta), where);
      tracker.observe(rel_err(z + zi + 2.0, (mu + hi) / theta), where);
      tracker.observe(rel_err(spec.beta_plus * spec.beta_minus, mu / ((mu + lo) * (mu + hi))), where);
    }
  }
  return tracker.finish();
}

CheckResult check_wronskian(const VerifyOptions& o, double tol) {
  Tracker tracker("wronskian", tol);
  for (double theta : kThetas) {
    const ModelParams p(theta, 0.0);
    for (Complex alpha : alpha_points(p, o.grid_size)) {
      const auto spec = roots(p, TransformPoint(alpha));
      const Complex z = spec.lambda_plus / theta, zi = spec.lambda_minus / theta;
      const Complex expected = spec.beta_plus * spec.beta_minus * (z - zi) * (z - zi);
      for (std::size_t s = 1; s <= 20; ++s) {
        const Complex prev = raw_psi(spec, p, s - 1), cur = raw_psi(spec, p, s),
                      next = raw_psi(spec, p, s + 1);
        const double scale =
            std::max({std::abs(next * prev), std::abs(cur * cur), std::abs(expected)});
        tracker.observe(std::abs(next * prev - cur * cur - expected) / scale,
                        label(theta, alpha) + " s=" + std::to_string(s));
      }
    }
  }
  return tracker.finish();
}

template <class Body>
void for_each_grid_point(Body body) {
  for (double theta : kThetas)
    for (double m : kShifts)
      for (double x : kStarts)
        for (double alpha : kAlphas)
          for (std::size_t t : kHorizons) body(ModelParams(theta, m), x, alpha, t);
}

std::string grid_label(const ModelParams& p, double x, double alpha, std::size_t t) {
  std::ostringstream os;
  os << "theta=" << p.theta() << " m=" << p.m() << " x=" << x << " alpha=" << alpha << " t=" << t;
  return os.str();
}

CheckResult check_sigma_recursion(double tol) {
  Tracker tracker("sigma_recursion", tol);
  for_each_grid_point([&](const ModelParams& p, double x, double alpha, std::size_t t) {
    const TransformPoint point(alpha);
    tracker.observe(rel_err(sigma_via_recursion(p, point, x, t), transform(p, point, x, t).sigma_t),
                    grid_label(p, x, alpha, t));
  });
  return tracker.finish();
}

CheckResult check_matrix_oracle(double tol) {
  Tracker tracker("matrix_oracle", tol);
  for_each_grid_point([&](const ModelParams& p, double x, double alpha, std::size_t t) {
    const auto closed = transform(p, TransformPoint(alpha), x, t);
    const auto matrix = matrix_mgf(p, alpha, x, t);
    // |L - M| / M evaluated through logs so tiny values keep full precision.
    tracker.observe(std::abs(std::expm1(closed.log_value.real() - matrix.log_value)),
                    grid_label(p, x, alpha, t));
  });
  return tracker.finish();
}

CheckResult check_exactness(double tol) {
  Tracker tracker("exactness_anchors", tol);
  for_each_grid_point([&](const ModelParams& p, double x, double alpha, std::size_t t) {
    const auto where = grid_label(p, x, alpha, t);
    const auto start = transform(p, TransformPoint(alpha), x, 0);
    tracker.observe(rel_err(start.value, Complex(std::exp(alpha * x * x))), where);
    tracker.observe(std::abs(transform(p, TransformPoint(0.0), x, t).value - 1.0), where);
    const auto ratios = sequence_ratios(roots(p, TransformPoint(alpha)), p, 0);
    tracker.observe(rel_err(ratios.r, p.theta()), where);
    tracker.observe(rel_err(ratios.inv_psi, p.theta()), where);
    tracker.observe(std::abs(ratios.log_pi), where);
  });
  return tracker.finish();
}

CheckResult check_monte_carlo(const VerifyOptions& o) {
  const ModelParams p(0.6, 1.0);
  const auto mc = monte_carlo_mgf(p, -0.2, 0.0, 10,
                                  {.n = o.mc_samples, .seed = o.seed, .threads = o.threads});
  const double exact = transform(p, TransformPoint(-0.2), 0.0, 10).value.real();
  CheckResult out;
  out.name = "monte_carlo";
  out.measured = std::abs(mc.value - exact) / *mc.std_error;
  out.threshold = 4.0;
  out.passed = out.measured <= out.threshold;
  std::ostringstream os;
  os.precision(10);
  os << "estimate=" << mc.value << " stderr=" << *mc.std_error << " exact=" << exact
     << " n=" << o.mc_samples << " seed=" << o.seed;
  out.detail = os.str();
  return out;
}

CheckResult check_rate_fit() {
  const auto fit = fit_convergence_ratio(ModelParams(0.6, 1.0), TransformPoint(-0.3), 0.5, 20, 80);
  CheckResult out;
  out.name = "convergence_rate";
  out.measured = std::abs(fit.ratio - fit.expected) / fit.expected;
  out.threshold = 0.05;
  out.passed = out.measured <= out.threshold;
  std::ostringstream os;
  os.precision(10);
  os << "fitted=" << fit.ratio << " theta/lambda+=" << fit.expected
     << " points=" << fit.points_used;
  out.detail = os.str();
  return out;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  auto tol = [&](double fallback) { return options.tolerance.value_or(fallback); };
  std::vector<CheckResult> results;
  results.push_back(check_exactness(tol(1e-15)));
  results.push_back(check_vieta(options, tol(1e-12)));
  results.push_back(check_symmetric_functions(options, tol(1e-12)));
  results.push_back(check_wronskian(options, tol(1e-10)));
  results.push_back(check_sigma_recursion(tol(1e-10)));
  results.push_back(check_matrix_oracle(tol(1e-8)));
  results.push_back(check_monte_carlo(options));
  results.push_back(check_rate_fit());
  return results;
}

}  // namespace ar1lt::cli
