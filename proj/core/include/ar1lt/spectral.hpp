#pragma once

// Roots of lambda^2 - (mu + theta^2 + 1) lambda + theta^2 = 0 (mu = -2 alpha),
// the domain D on which their moduli separate around |theta|, and the
// sequences
//
//   psi_t = beta+ (lambda+/theta)^t + beta- (lambda-/theta)^t
//   pi_t  = beta+ lambda+^(t+1)    + beta- lambda-^(t+1)
//
// carried as ratios and logarithms so that t can be large.

#include <complex>
#include <cstddef>

#include "ar1lt/model.hpp"

namespace ar1lt {

using Complex = std::complex<double>;

/// Relative margin for the strict modulus inequalities defining D.
inline constexpr double kDomainMargin = 1e-12;

/// Largest index for which raw psi_t / pi_t may be formed.
inline constexpr std::size_t kRawSequenceLimit = 50;

/// Transform argument alpha together with its Laplace alias mu = -2 alpha.
class TransformPoint {
 public:
  explicit TransformPoint(Complex alpha) : alpha_(alpha), mu_(-2.0 * alpha) {}
  explicit TransformPoint(double alpha) : TransformPoint(Complex(alpha, 0.0)) {}

  static TransformPoint from_mu(Complex mu) { return TransformPoint(-0.5 * mu); }

  Complex alpha() const noexcept { return alpha_; }
  Complex mu() const noexcept { return mu_; }
  bool is_zero() const noexcept { return alpha_ == Complex(0.0, 0.0); }
  bool is_real() const noexcept { return alpha_.imag() == 0.0; }

 private:
  Complex alpha_;
  Complex mu_;
};

struct SpectralData {
  Complex lambda_plus;   // larger modulus
  Complex lambda_minus;
  Complex beta_plus;
  Complex beta_minus;
  bool in_domain = false;

  /// z = lambda+ / theta; lambda- / theta == 1/z.
  Complex z(const ModelParams& params) const { return lambda_plus / params.theta(); }
  /// K = z + 1/z, coefficient of psi_{t+1} = K psi_t - psi_{t-1}.
  Complex recurrence_coefficient(const ModelParams& params) const {
    return (lambda_plus + lambda_minus) / params.theta();
  }
};

/// Ratios at step t: r = psi_t / psi_{t+1}, inv_psi = 1 / psi_{t+1},
/// log_pi = log pi_t.
struct SequenceRatios {
  std::size_t t = 0;
  Complex r;
  Complex inv_psi;
  Complex log_pi;
};

/// Roots labelled by modulus, beta weights, and D membership.
/// Throws Errc::domain_boundary when |lambda+| and |lambda-| coincide to
/// within kDomainMargin (relative).
SpectralData roots(const ModelParams& params, const TransformPoint& point);

/// True iff |lambda-| < |theta| < |lambda+| with the strict margin. Boundary
/// points return false.
bool domain_check(const ModelParams& params, const TransformPoint& point);

/// Incremental evaluation of SequenceRatios for t = 0, 1, 2, ... without ever
/// forming psi or pi. r follows the continued fraction r_s = 1 / (K - r_{s-1})
/// from r_0 = theta; inv_psi is the running product of the r_s.
class RatioWalker {
 public:
  /// Throws Errc::out_of_domain if !spec.in_domain.
  RatioWalker(const SpectralData& spec, const ModelParams& params);

  std::size_t t() const noexcept { return t_; }
  Complex r() const noexcept { return r_; }
  Complex inv_psi() const noexcept { return inv_psi_; }

  /// Ratios at the current step; log_pi is evaluated on demand.
  SequenceRatios current() const;

  /// Moves to t + 1. Throws Errc::singular_sequence if psi_{t+2} vanishes.
  void advance();

  /// Moves to step t (>= current). Once r sits on a floating-point fixed point
  /// the remaining steps are taken in closed form.
  void advance_to(std::size_t t);

 private:
  SpectralData spec_;
  Complex recurrence_;
  std::size_t t_ = 0;
  Complex r_;
  Complex inv_psi_;
};

/// SequenceRatios at step t; O(t) work.
SequenceRatios sequence_ratios(const SpectralData& spec, const ModelParams& params,
                               std::size_t t);

/// log pi_t = (t+1) log lambda+ + log(beta+ + beta- (lambda-/lambda+)^(t+1)),
/// principal branches; exactly 0 at t == 0.
Complex log_pi(const SpectralData& spec, std::size_t t);

/// log pi_t - t log lambda+, i.e. log lambda+ + log(beta+ + beta- ...). Stays
/// O(1) as t grows, so large-t callers can cancel the linear part exactly.
Complex log_pi_excess(const SpectralData& spec, std::size_t t);

// Direct evaluation from the defining sums. Cross-checks only; throws
// Errc::out_of_range above kRawSequenceLimit.
Complex raw_psi(const SpectralData& spec, const ModelParams& params, std::size_t t);
Complex raw_pi(const SpectralData& spec, std::size_t t);

}  // namespace ar1lt
