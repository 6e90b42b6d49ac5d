#include "ar1lt/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>
#include <vector>

#include <Eigen/Cholesky>

#include "ar1lt/closed_form.hpp"
#include "ar1lt/error.hpp"
#include "ar1lt/quadrature.hpp"

namespace ar1lt {

namespace {

constexpr std::size_t kShards = 64;

struct RunningMoments {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double v) {
    count += 1.0;
    const double delta = v - mean;
    mean += delta / count;
    m2 += delta * (v - mean);
  }

  void merge(const RunningMoments& other) {
    if (other.count == 0.0) return;
    const double total = count + other.count;
    const double delta = other.mean - mean;
    mean += delta * other.count / total;
    m2 += other.m2 + delta * delta * count * other.count / total;
    count = total;
  }
};

OracleResult exact_result(double log_value, std::size_t n) {
  OracleResult out;
  out.method = OracleMethod::monte_carlo;
  out.log_value = log_value;
  out.value = std::exp(log_value);
  out.std_error = 0.0;
  out.n_samples = n;
  return out;
}

void check_monte_carlo_args(double alpha, std::size_t n) {
  if (!(alpha <= 0.0)) {
    throw Error(Errc::invalid_parameter, "Monte Carlo oracle requires alpha <= 0");
  }
  if (n < 2) throw Error(Errc::invalid_parameter, "Monte Carlo oracle requires n >= 2");
}

// Runs draw(stream) -> sample for every path, shard by shard.
template <class Draw>
OracleResult run_shards(const MonteCarloOptions& options, Draw draw) {
  std::vector<RunningMoments> shard_moments(kShards);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t k = next++; k < kShards; k = next++) {
      const std::size_t paths = options.n / kShards + (k < options.n % kShards ? 1 : 0);
      NormalStream normal(derive_seed(options.seed, k));
      RunningMoments& moments = shard_moments[k];
      for (std::size_t i = 0; i < paths; ++i) moments.push(draw(normal));
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, kShards);
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  RunningMoments total;
  for (const auto& moments : shard_moments) total.merge(moments);

  OracleResult out;
  out.method = OracleMethod::monte_carlo;
  out.value = total.mean;
  out.log_value = std::log(total.mean);
  out.std_error = std::sqrt(total.m2 / (total.count - 1.0) / total.count);
  out.n_samples = options.n;
  return out;
}

double path_functional(const ModelParams& params, double alpha, double x, std::size_t t,
                       NormalStream& normal) {
  double current = x;
  double sum = x * x;
  for (std::size_t s = 1; s <= t; ++s) {
    current = step(params, current, normal());
    sum += current * current;
  }
  return std::exp(alpha * sum);
}

}  // namespace

std::string_view to_string(OracleMethod method) noexcept {
  switch (method) {
    case OracleMethod::matrix: return "matrix";
    case OracleMethod::monte_carlo: return "monte_carlo";
    case OracleMethod::quadrature: return "quadrature";
  }
  return "unknown";
}

OracleResult matrix_mgf(const ModelParams& params, double alpha, double x, std::size_t t) {
  if (t > kMatrixOracleLimit) {
    std::ostringstream os;
    os << "matrix oracle is limited to t <= " << kMatrixOracleLimit << ", got " << t;
    throw Error(Errc::out_of_range, os.str());
  }
  const auto n = static_cast<Eigen::Index>(t);
  const Eigen::MatrixXd system =
      Eigen::MatrixXd::Identity(n, n) - 2.0 * alpha * conditional_covariance(params, t);
  const Eigen::VectorXd mean = conditional_mean_vector(params, x, t);

  double log_value = alpha * x * x;
  if (n > 0) {
    const Eigen::LLT<Eigen::MatrixXd> llt(system);
    if (llt.info() != Eigen::Success) {
      std::ostringstream os;
      os << "I - 2 alpha Sigma is not positive definite (alpha=" << alpha << ", t=" << t
         << "); the transform diverges";
      throw Error(Errc::not_positive_definite, os.str());
    }
    const double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    const double quadratic = mean.dot(llt.solve(mean));
    log_value += -0.5 * log_det + alpha * quadratic;
  }

  OracleResult out;
  out.method = OracleMethod::matrix;
  out.log_value = log_value;
  out.value = std::exp(log_value);
  return out;
}

OracleResult monte_carlo_mgf(const ModelParams& params, double alpha, double x, std::size_t t,
                             const MonteCarloOptions& options) {
  check_monte_carlo_args(alpha, options.n);
  if (alpha == 0.0) return exact_result(0.0, options.n);
  if (t == 0) return exact_result(alpha * x * x, options.n);
  return run_shards(options, [&](NormalStream& normal) {
    return path_functional(params, alpha, x, t, normal);
  });
}

OracleResult monte_carlo_unconditional_mgf(const ModelParams& params, double alpha,
                                           std::size_t t, const MonteCarloOptions& options) {
  check_monte_carlo_args(alpha, options.n);
  if (alpha == 0.0) return exact_result(0.0, options.n);
  const double sd = std::sqrt(params.stationary_variance());
  return run_shards(options, [&](NormalStream& normal) {
    const double start = params.m() + sd * normal();
    return path_functional(params, alpha, start, t, normal);
  });
}

Complex unconditional_transform(const ModelParams& params, const TransformPoint& point,
                                std::size_t t, std::size_t quad_order) {
  if (quad_order < kMinQuadratureOrder) {
    std::ostringstream os;
    os << "quadrature order must be >= " << kMinQuadratureOrder << ", got " << quad_order;
    throw Error(Errc::invalid_parameter, os.str());
  }
  if (point.is_zero()) return 1.0;

  const double sd = std::sqrt(params.stationary_variance());
  auto integrate = [&](std::size_t order) {
    return normal_expectation(gauss_hermite(order), params.m(), sd, [&](double x) {
      return transform(params, point, x, t).value;
    });
  };
  const Complex coarse = integrate(quad_order);
  const Complex fine = integrate(2 * quad_order);
  if (std::abs(coarse - fine) > kQuadratureTolerance * std::abs(fine)) {
    std::ostringstream os;
    os << "quadrature did not converge: order " << quad_order << " gives " << coarse
       << ", order " << 2 * quad_order << " gives " << fine;
    throw Error(Errc::quadrature_accuracy, os.str());
  }
  return coarse;
}

}  // namespace ar1lt
