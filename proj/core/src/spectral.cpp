#include "ar1lt/spectral.hpp"

#include <cmath>
#include <sstream>

#include "ar1lt/error.hpp"

namespace ar1lt {

namespace {

void require_raw_index(std::size_t t) {
  if (t > kRawSequenceLimit) {
    std::ostringstream os;
    os << "raw sequence index " << t << " exceeds " << kRawSequenceLimit;
    throw Error(Errc::out_of_range, os.str());
  }
}

}  // namespace

SpectralData roots(const ModelParams& params, const TransformPoint& point) {
  const double theta = params.theta();
  const Complex mu = point.mu();
  const Complex sum = mu + 1.0 + theta * theta;
  const Complex disc = (mu + (1.0 + theta) * (1.0 + theta)) *
                       (mu + (1.0 - theta) * (1.0 - theta));
  const Complex root = std::sqrt(disc);

  // Take the sign that avoids cancellation, then recover the other root from
  // the product theta^2.
  const Complex q = (std::real(std::conj(sum) * root) >= 0.0) ? sum + root : sum - root;
  Complex big = 0.5 * q;
  Complex small = theta * theta / big;
  if (std::abs(small) > std::abs(big)) std::swap(big, small);

  const double big_mod = std::abs(big);
  const double small_mod = std::abs(small);
  if (big_mod - small_mod <= kDomainMargin * big_mod) {
    std::ostringstream os;
    os << "alpha=" << point.alpha() << " lies on the boundary of D for theta=" << theta
       << " (|lambda+| == |lambda-|)";
    throw Error(Errc::domain_boundary, os.str());
  }

  SpectralData out;
  out.lambda_plus = big;
  out.lambda_minus = small;
  const Complex gap = big - small;
  out.beta_plus = (1.0 - small) / gap;
  out.beta_minus = (big - 1.0) / gap;

  const double abs_theta = std::abs(theta);
  out.in_domain = small_mod < abs_theta * (1.0 - kDomainMargin) &&
                  big_mod > abs_theta * (1.0 + kDomainMargin);
  return out;
}

bool domain_check(const ModelParams& params, const TransformPoint& point) {
  try {
    return roots(params, point).in_domain;
  } catch (const Error& e) {
    if (e.code() == Errc::domain_boundary) return false;
    throw;
  }
}

RatioWalker::RatioWalker(const SpectralData& spec, const ModelParams& params)
    : spec_(spec) {
  if (!spec.in_domain) {
    throw Error(Errc::out_of_domain, "sequence ratios require alpha in D");
  }
  recurrence_ = spec.recurrence_coefficient(params);
  // psi_0 = 1, psi_1 = 1/theta.
  r_ = params.theta();
  inv_psi_ = params.theta();
}

SequenceRatios RatioWalker::current() const {
  return SequenceRatios{t_, r_, inv_psi_, log_pi(spec_, t_)};
}

void RatioWalker::advance() {
  const Complex denom = recurrence_ - r_;
  if (denom == Complex(0.0, 0.0)) {
    std::ostringstream os;
    os << "psi vanishes at t=" << t_ + 2;
    throw Error(Errc::singular_sequence, os.str());
  }
  const Complex r = 1.0 / denom;
  if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) {
    throw Error(Errc::singular_sequence, "non-finite psi ratio");
  }
  ++t_;
  r_ = r;
  inv_psi_ *= r;
}

void RatioWalker::advance_to(std::size_t t) {
  while (t_ < t) {
    const Complex previous = r_;
    advance();
    if (r_ == previous && t_ < t) {
      inv_psi_ *= std::pow(r_, static_cast<double>(t - t_));
      t_ = t;
    }
  }
}

SequenceRatios sequence_ratios(const SpectralData& spec, const ModelParams& params,
                               std::size_t t) {
  RatioWalker walker(spec, params);
  walker.advance_to(t);
  return walker.current();
}

Complex log_pi_excess(const SpectralData& spec, std::size_t t) {
  if (t == 0) return 0.0;
  const auto steps = static_cast<double>(t + 1);
  return std::log(spec.lambda_plus) +
         std::log(spec.beta_plus +
                  spec.beta_minus * std::pow(spec.lambda_minus / spec.lambda_plus, steps));
}

Complex log_pi(const SpectralData& spec, std::size_t t) {
  if (t == 0) return 0.0;
  return static_cast<double>(t) * std::log(spec.lambda_plus) + log_pi_excess(spec, t);
}

Complex raw_psi(const SpectralData& spec, const ModelParams& params, std::size_t t) {
  require_raw_index(t);
  const auto n = static_cast<int>(t);
  return spec.beta_plus * std::pow(spec.lambda_plus / params.theta(), n) +
         spec.beta_minus * std::pow(spec.lambda_minus / params.theta(), n);
}

Complex raw_pi(const SpectralData& spec, std::size_t t) {
  require_raw_index(t);
  const auto n = static_cast<int>(t + 1);
  return spec.beta_plus * std::pow(spec.lambda_plus, n) +
         spec.beta_minus * std::pow(spec.lambda_minus, n);
}

}  // namespace ar1lt
