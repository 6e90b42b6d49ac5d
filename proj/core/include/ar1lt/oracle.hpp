#pragma once

// Evaluations of L_t(alpha, x) that do not go through the closed form:
//
//  * matrix_mgf: (X_1..X_t | X_0 = x) is Gaussian with mean mu and covariance
//    Sigma, hence
//      E[exp(alpha Z'Z)] = det(I - 2 alpha Sigma)^(-1/2)
//                          * exp(alpha mu' (I - 2 alpha Sigma)^(-1) mu).
//  * monte_carlo_mgf: sample mean of exp(alpha S_t) over simulated paths.
//  * unconditional_transform: L_t integrated over the stationary law of X_0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "ar1lt/model.hpp"
#include "ar1lt/spectral.hpp"

namespace ar1lt {

inline constexpr std::size_t kMatrixOracleLimit = 2000;
inline constexpr std::size_t kMinQuadratureOrder = 16;
inline constexpr double kQuadratureTolerance = 1e-8;

enum class OracleMethod { matrix, monte_carlo, quadrature };

std::string_view to_string(OracleMethod method) noexcept;

struct OracleResult {
  double value = 0.0;
  OracleMethod method = OracleMethod::matrix;
  std::optional<double> std_error;  // monte_carlo only
  std::optional<std::size_t> n_samples;
  double log_value = 0.0;           // log(value); finite even when value underflows
};

/// Exact Gaussian quadratic-form MGF via a Cholesky factorisation of
/// I - 2 alpha Sigma. Throws Errc::not_positive_definite when the factorisation
/// fails and Errc::out_of_range for t > kMatrixOracleLimit.
OracleResult matrix_mgf(const ModelParams& params, double alpha, double x, std::size_t t);

struct MonteCarloOptions {
  std::size_t n = 100000;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Mean and standard error of exp(alpha S_t) over n conditional paths.
///
/// Paths are split over a fixed number of shards; shard k draws from
/// NormalStream(derive_seed(seed, k)) and shard results are merged in shard
/// order, so the estimate does not depend on the thread count.
/// Requires alpha <= 0 and n >= 2.
OracleResult monte_carlo_mgf(const ModelParams& params, double alpha, double x, std::size_t t,
                             const MonteCarloOptions& options);

/// As monte_carlo_mgf but with X_0 drawn from the stationary law
/// N(m, 1/(1 - theta^2)) (first draw of each path).
OracleResult monte_carlo_unconditional_mgf(const ModelParams& params, double alpha,
                                           std::size_t t, const MonteCarloOptions& options);

/// Integral of L_t(alpha, x) against N(m, 1/(1 - theta^2)) by Gauss-Hermite
/// quadrature of order quad_order (>= kMinQuadratureOrder). The value is
/// recomputed at 2 * quad_order; a relative gap above kQuadratureTolerance
/// throws Errc::quadrature_accuracy.
Complex unconditional_transform(const ModelParams& params, const TransformPoint& point,
                                std::size_t t, std::size_t quad_order);

}  // namespace ar1lt
