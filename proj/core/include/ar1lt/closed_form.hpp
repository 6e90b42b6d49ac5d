#pragma once

// Exact exponential transform of the partial sum of squares,
//
//   L_t(alpha, x) = E[exp(alpha * sum_{s=0..t} X_s^2) | X_0 = x]
//                 = pi_t^(-1/2) exp(alpha Sigma_t),
//   Sigma_t = A t + x^2 + B (theta - psi_t/psi_{t+1}) + C (theta - 1/psi_{t+1}),
//
// and the multiplicative-ergodicity limit
//
//   E_x[exp(alpha S_t - t Lambda(alpha))] -> f(alpha, x)   as t -> inf,
//
// which converges geometrically at rate |theta / lambda+|.
//
// All results are assembled in log space. The drift t * Lambda(alpha) is kept
// separate from the O(1) remainder, so normalized values stay accurate at
// t ~ 1e6 and beyond.

#include <cstddef>
#include <vector>

#include "ar1lt/model.hpp"
#include "ar1lt/spectral.hpp"

namespace ar1lt {

struct ClosedFormConstants {
  Complex nu;
  Complex A;
  Complex B;
  Complex C;
};

struct TransformValue {
  Complex log_value;
  Complex value;             // exp(log_value)
  Complex sigma_t;
  bool out_of_range = false;  // Re(log_value) outside the double exponent range
};

struct ErgodicConstants {
  Complex lambda_of_alpha;  // Lambda(alpha)
  Complex f_check;          // limit of the normalized transform
  double rate = 0.0;        // |theta / lambda+|
};

/// nu, A, B, C for (alpha, x). Requires alpha in D; alpha == 0 throws
/// Errc::singular_constant (B carries a 1/(-2 alpha) factor).
ClosedFormConstants constants(const ModelParams& params, const TransformPoint& point,
                              double x);

/// L_t(alpha, x). alpha == 0 yields exactly 1, with sigma_t equal to the sum
/// of squared conditional means (its alpha -> 0 limit). Otherwise alpha must
/// be in D (Errc::out_of_domain).
TransformValue transform(const ModelParams& params, const TransformPoint& point, double x,
                         std::size_t t);

/// Sigma_t from its defining weighted sum over the one-step recursion
///   z_0 = x,  z_s = (psi_{s-1}/psi_s) z_{s-1} + (1 - theta) m,
///   Sigma_t = sum_{s=0..t} psi_s / (theta psi_{s+1}) z_s^2,
/// using raw psi. Independent of constants(); cross-check only, t <= 50.
Complex sigma_via_recursion(const ModelParams& params, const TransformPoint& point, double x,
                            std::size_t t);

/// Lambda(alpha), f(alpha, x) and the convergence rate. alpha == 0 gives
/// Lambda = 0, f = 1, rate = |theta|.
ErgodicConstants ergodic_constants(const ModelParams& params, const TransformPoint& point,
                                   double x);

/// L_t(alpha, x) exp(-t Lambda(alpha)).
Complex normalized_transform(const ModelParams& params, const TransformPoint& point, double x,
                             std::size_t t);

struct TransformSample {
  std::size_t t = 0;
  TransformValue transform;
  Complex normalized;
};

/// transform and normalized_transform for t = 0..t_max in one O(t_max) pass.
std::vector<TransformSample> transform_series(const ModelParams& params,
                                              const TransformPoint& point, double x,
                                              std::size_t t_max);

struct RateFit {
  double ratio = 0.0;     // exp(slope) of the least-squares line through log|error|
  double expected = 0.0;  // |theta / lambda+|
  std::size_t points_used = 0;
};

/// Fits the geometric decay of |normalized(t) - f(alpha, x)| over
/// t in [t_first, t_last], dropping errors below noise_floor. With fewer than
/// two usable points the ratio is NaN.
RateFit fit_convergence_ratio(const ModelParams& params, const TransformPoint& point, double x,
                              std::size_t t_first, std::size_t t_last,
                              double noise_floor = 1e-13);

}  // namespace ar1lt
