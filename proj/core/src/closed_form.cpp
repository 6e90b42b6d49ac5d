#include "ar1lt/closed_form.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "ar1lt/error.hpp"

namespace ar1lt {

namespace {

const double kLogMax = std::log(std::numeric_limits<double>::max());
const double kLogMin = std::log(std::numeric_limits<double>::min());

SpectralData in_domain_roots(const ModelParams& params, const TransformPoint& point) {
  auto out_of_domain = [&] {
    std::ostringstream os;
    os << "alpha=" << point.alpha() << " is outside D for theta=" << params.theta();
    return Error(Errc::out_of_domain, os.str());
  };
  SpectralData spec;
  try {
    spec = roots(params, point);
  } catch (const Error& e) {
    if (e.code() == Errc::domain_boundary) throw out_of_domain();
    throw;
  }
  if (!spec.in_domain) throw out_of_domain();
  return spec;
}

ClosedFormConstants constants_unchecked(const ModelParams& params, const TransformPoint& point,
                                        double x) {
  const double theta = params.theta();
  const double shift = 1.0 - theta;
  const Complex mu = point.mu();

  ClosedFormConstants k;
  k.nu = params.m() * shift / (mu + shift * shift);
  k.A = params.m() * shift * k.nu;
  const Complex deviation = x - shift * k.nu;
  k.B = theta * (deviation * deviation) / mu - theta * (k.nu * k.nu);
  k.C = 2.0 * k.nu * deviation;
  return k;
}

TransformValue make_value(Complex log_value, Complex sigma) {
  TransformValue out;
  out.log_value = log_value;
  out.value = std::exp(log_value);
  out.sigma_t = sigma;
  out.out_of_range = log_value.real() > kLogMax || log_value.real() < kLogMin;
  return out;
}

// Sum of squared conditional means, the alpha -> 0 limit of Sigma_t.
double sigma_at_zero(const ModelParams& params, double x, std::size_t t) {
  const double theta = params.theta();
  const double m = params.m();
  const double d = x - m;
  const auto n = static_cast<double>(t + 1);
  return n * m * m + 2.0 * m * d * (1.0 - std::pow(theta, n)) / (1.0 - theta) +
         d * d * (1.0 - std::pow(theta, 2.0 * n)) / (1.0 - theta * theta);
}

// Everything needed to assemble log L_t as t * drift + remainder(t).
class Assembly {
 public:
  Assembly(const ModelParams& params, const TransformPoint& point, double x)
      : params_(params),
        alpha_(point.alpha()),
        x_(x),
        spec_(in_domain_roots(params, point)),
        k_(constants_unchecked(params, point, x)),
        drift_(alpha_ * k_.A - 0.5 * std::log(spec_.lambda_plus)) {}

  const SpectralData& spec() const { return spec_; }
  const ClosedFormConstants& constants() const { return k_; }
  Complex drift() const { return drift_; }

  // x^2 + B (theta - r_t) + C (theta - 1/psi_{t+1}); exactly x^2 at t = 0.
  Complex correction(const RatioWalker& walker) const {
    const double theta = params_.theta();
    return x_ * x_ + k_.B * (theta - walker.r()) + k_.C * (theta - walker.inv_psi());
  }

  Complex remainder(const RatioWalker& walker) const {
    return -0.5 * log_pi_excess(spec_, walker.t()) + alpha_ * correction(walker);
  }

  TransformSample sample(const RatioWalker& walker) const {
    const auto t = static_cast<double>(walker.t());
    const Complex rem = remainder(walker);
    TransformSample out;
    out.t = walker.t();
    out.transform = make_value(t * drift_ + rem, k_.A * t + correction(walker));
    out.normalized = std::exp(rem);
    return out;
  }

 private:
  ModelParams params_;
  Complex alpha_;
  double x_;
  SpectralData spec_;
  ClosedFormConstants k_;
  Complex drift_;
};

}  // namespace

ClosedFormConstants constants(const ModelParams& params, const TransformPoint& point,
                              double x) {
  if (point.is_zero()) {
    throw Error(Errc::singular_constant, "B is singular at alpha = 0");
  }
  in_domain_roots(params, point);
  return constants_unchecked(params, point, x);
}

TransformValue transform(const ModelParams& params, const TransformPoint& point, double x,
                         std::size_t t) {
  if (point.is_zero()) {
    return make_value(0.0, sigma_at_zero(params, x, t));
  }
  const Assembly assembly(params, point, x);
  RatioWalker walker(assembly.spec(), params);
  walker.advance_to(t);
  return assembly.sample(walker).transform;
}

Complex sigma_via_recursion(const ModelParams& params, const TransformPoint& point, double x,
                            std::size_t t) {
  if (t > kRawSequenceLimit) {
    std::ostringstream os;
    os << "sigma_via_recursion is limited to t <= " << kRawSequenceLimit << ", got " << t;
    throw Error(Errc::out_of_range, os.str());
  }
  const SpectralData spec = in_domain_roots(params, point);
  const double theta = params.theta();
  const double forcing = (1.0 - theta) * params.m();

  // psi_0..psi_{t+1} straight from the two-exponential form.
  const Complex z_plus = spec.lambda_plus / theta;
  const Complex z_minus = spec.lambda_minus / theta;
  std::vector<Complex> psi(t + 2);
  for (std::size_t s = 0; s < psi.size(); ++s) {
    const auto n = static_cast<int>(s);
    psi[s] = spec.beta_plus * std::pow(z_plus, n) + spec.beta_minus * std::pow(z_minus, n);
  }

  Complex z = x;
  Complex sigma = psi[0] / (theta * psi[1]) * (z * z);
  for (std::size_t s = 1; s <= t; ++s) {
    z = psi[s - 1] / psi[s] * z + forcing;
    sigma += psi[s] / (theta * psi[s + 1]) * (z * z);
  }
  return sigma;
}

ErgodicConstants ergodic_constants(const ModelParams& params, const TransformPoint& point,
                                   double x) {
  if (point.is_zero()) {
    return ErgodicConstants{0.0, 1.0, std::abs(params.theta())};
  }
  const Assembly assembly(params, point, x);
  const SpectralData& spec = assembly.spec();
  const ClosedFormConstants& k = assembly.constants();
  const double theta = params.theta();

  ErgodicConstants out;
  out.lambda_of_alpha = assembly.drift();
  const Complex exponent = x * x + k.B * (theta - theta / spec.lambda_plus) + k.C * theta;
  out.f_check = std::exp(-0.5 * std::log(spec.beta_plus * spec.lambda_plus) +
                         point.alpha() * exponent);
  out.rate = std::abs(theta / spec.lambda_plus);
  return out;
}

Complex normalized_transform(const ModelParams& params, const TransformPoint& point, double x,
                             std::size_t t) {
  if (point.is_zero()) return 1.0;
  const Assembly assembly(params, point, x);
  RatioWalker walker(assembly.spec(), params);
  walker.advance_to(t);
  // The t * Lambda drift cancels identically against log L_t.
  return std::exp(assembly.remainder(walker));
}

std::vector<TransformSample> transform_series(const ModelParams& params,
                                              const TransformPoint& point, double x,
                                              std::size_t t_max) {
  std::vector<TransformSample> out;
  out.reserve(t_max + 1);
  if (point.is_zero()) {
    for (std::size_t t = 0; t <= t_max; ++t) {
      out.push_back({t, make_value(0.0, sigma_at_zero(params, x, t)), 1.0});
    }
    return out;
  }
  const Assembly assembly(params, point, x);
  RatioWalker walker(assembly.spec(), params);
  out.push_back(assembly.sample(walker));
  while (walker.t() < t_max) {
    walker.advance();
    out.push_back(assembly.sample(walker));
  }
  return out;
}

RateFit fit_convergence_ratio(const ModelParams& params, const TransformPoint& point, double x,
                              std::size_t t_first, std::size_t t_last, double noise_floor) {
  const ErgodicConstants limit = ergodic_constants(params, point, x);
  const auto series = transform_series(params, point, x, t_last);

  // Ordinary least squares of log|error| on t.
  double n = 0.0, sum_t = 0.0, sum_y = 0.0, sum_tt = 0.0, sum_ty = 0.0;
  for (std::size_t t = t_first; t <= t_last; ++t) {
    const double error = std::abs(series[t].normalized - limit.f_check);
    if (!(error >= noise_floor)) continue;
    const auto tt = static_cast<double>(t);
    const double y = std::log(error);
    n += 1.0;
    sum_t += tt;
    sum_y += y;
    sum_tt += tt * tt;
    sum_ty += tt * y;
  }

  RateFit fit;
  fit.expected = limit.rate;
  fit.points_used = static_cast<std::size_t>(n);
  if (fit.points_used < 2) {
    fit.ratio = std::numeric_limits<double>::quiet_NaN();
    return fit;
  }
  const double slope = (n * sum_ty - sum_t * sum_y) / (n * sum_tt - sum_t * sum_t);
  fit.ratio = std::exp(slope);
  return fit;
}

}  // namespace ar1lt
