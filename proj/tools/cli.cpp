#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ar1lt/ar1lt.hpp"
#include "format.hpp"
#include "verify.hpp"

namespace ar1lt::cli {

namespace {

using nlohmann::json;

// JSON has no inf/nan; nlohmann would emit null, which is what we want.
void emit(std::ostream& out, const json& object) { out << object.dump() << '\n'; }

void emit_error(std::ostream& out, Errc code, const std::string& message) {
  emit(out, json{{"error", std::string(to_string(code))}, {"message", message}});
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::out_of_domain:
    case Errc::domain_boundary:
      return kDomainError;
    case Errc::invalid_parameter:
      return kUsageError;
    default:
      return kVerificationFailed;
  }
}

struct PointArgs {
  double theta = 0.0;
  double m = 0.0;
  double x = 0.0;
  double alpha = 0.0;
  double alpha_im = 0.0;
};

void add_model_flags(CLI::App* cmd, PointArgs& args) {
  cmd->add_option("--theta", args.theta, "AR coefficient, 0 < |theta| < 1")->required();
  cmd->add_option("--m", args.m, "level shift")->capture_default_str();
  cmd->add_option("--x", args.x, "starting value X_0")->capture_default_str();
}

struct SweepArgs {
  PointArgs point;
  std::vector<double> alphas;
  std::vector<double> alphas_im;
  std::vector<std::size_t> horizons;
  std::string t_range;
  std::string format = "csv";
  bool strict = false;
  unsigned threads = 0;
};

constexpr const char* kSweepColumns[] = {"alpha_re",       "alpha_im",      "t",
                                         "log_L_re",       "log_L_im",      "normalized_re",
                                         "normalized_im",  "Lambda_re",     "rate",
                                         "error"};

struct SweepRow {
  Complex alpha;
  std::size_t t = 0;
  Complex log_value;
  Complex normalized;
  double lambda_re = 0.0;
  double rate = 0.0;
  std::string error;  // empty on success
};

std::vector<SweepRow> sweep_one_alpha(const ModelParams& params, Complex alpha, double x,
                                      const std::vector<std::size_t>& horizons) {
  std::vector<SweepRow> rows;
  const TransformPoint point(alpha);
  try {
    const std::size_t t_max = *std::max_element(horizons.begin(), horizons.end());
    const auto series = transform_series(params, point, x, t_max);
    const auto limit = ergodic_constants(params, point, x);
    for (std::size_t t : horizons) {
      rows.push_back({alpha, t, series[t].transform.log_value, series[t].normalized,
                      limit.lambda_of_alpha.real(), limit.rate, {}});
    }
  } catch (const Error& e) {
    rows.clear();
    for (std::size_t t : horizons) {
      SweepRow row;
      row.alpha = alpha;
      row.t = t;
      row.error = std::string(to_string(e.code()));
      rows.push_back(row);
    }
  }
  return rows;
}

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows, bool csv) {
  if (csv) {
    for (std::size_t i = 0; i < std::size(kSweepColumns); ++i) {
      out << (i ? "," : "") << kSweepColumns[i];
    }
    out << '\n';
  }
  for (const auto& row : rows) {
    const bool ok = row.error.empty();
    if (csv) {
      auto num = [&](double v) { return ok ? format_double(v) : std::string(); };
      out << format_double(row.alpha.real()) << ',' << format_double(row.alpha.imag()) << ','
          << row.t << ',' << num(row.log_value.real()) << ',' << num(row.log_value.imag()) << ','
          << num(row.normalized.real()) << ',' << num(row.normalized.imag()) << ','
          << num(row.lambda_re) << ',' << num(row.rate) << ',' << row.error << '\n';
    } else {
      json j = {{"alpha_re", row.alpha.real()}, {"alpha_im", row.alpha.imag()}, {"t", row.t}};
      if (ok) {
        j["log_L_re"] = row.log_value.real();
        j["log_L_im"] = row.log_value.imag();
        j["normalized_re"] = row.normalized.real();
        j["normalized_im"] = row.normalized.imag();
        j["Lambda_re"] = row.lambda_re;
        j["rate"] = row.rate;
        j["error"] = nullptr;
      } else {
        j["error"] = row.error;
      }
      emit(out, j);
    }
  }
}

std::vector<std::size_t> parse_range(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--t-range", "expected FROM:TO");
  const auto from = std::stoull(spec.substr(0, colon));
  const auto to = std::stoull(spec.substr(colon + 1));
  if (to < from) throw CLI::ValidationError("--t-range", "TO must be >= FROM");
  std::vector<std::size_t> out;
  for (auto t = from; t <= to; ++t) out.push_back(t);
  return out;
}

int cmd_transform(const PointArgs& a, std::size_t t, std::ostream& out) {
  const ModelParams params(a.theta, a.m);
  const TransformPoint point(Complex(a.alpha, a.alpha_im));
  const auto v = transform(params, point, a.x, t);
  emit(out, json{{"log_value_re", v.log_value.real()},
                 {"log_value_im", v.log_value.imag()},
                 {"value_re", v.value.real()},
                 {"value_im", v.value.imag()},
                 {"sigma_re", v.sigma_t.real()},
                 {"sigma_im", v.sigma_t.imag()},
                 {"in_domain", true},
                 {"out_of_range", v.out_of_range}});
  return kSuccess;
}

int cmd_ergodic(const PointArgs& a, std::ostream& out) {
  const ModelParams params(a.theta, a.m);
  const auto e = ergodic_constants(params, TransformPoint(Complex(a.alpha, a.alpha_im)), a.x);
  emit(out, json{{"Lambda_re", e.lambda_of_alpha.real()},
                 {"Lambda_im", e.lambda_of_alpha.imag()},
                 {"f_check_re", e.f_check.real()},
                 {"f_check_im", e.f_check.imag()},
                 {"rate", e.rate}});
  return kSuccess;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
  const auto results = run_verification(options);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " measured=" << format_shortest(r.measured)
        << " threshold=" << format_shortest(r.threshold);
    if (!r.detail.empty()) out << " (" << r.detail << ')';
    out << '\n';
  }
  out << (all ? "all checks passed" : "some checks FAILED") << '\n';
  return all ? kSuccess : kVerificationFailed;
}

int cmd_sweep(SweepArgs& a, std::ostream& out) {
  const ModelParams params(a.point.theta, a.point.m);
  if (!a.t_range.empty()) {
    const auto range = parse_range(a.t_range);
    a.horizons.insert(a.horizons.end(), range.begin(), range.end());
  }
  if (a.alphas.empty() || a.horizons.empty()) {
    throw CLI::ValidationError("sweep", "alpha and t grids must be non-empty");
  }
  if (!a.alphas_im.empty() && a.alphas_im.size() != a.alphas.size()) {
    throw CLI::ValidationError("--alpha-im", "must have as many entries as --alpha");
  }

  const std::size_t count = a.alphas.size();
  std::vector<std::vector<SweepRow>> blocks(count);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < count; i += stride) {
      const Complex alpha(a.alphas[i], a.alphas_im.empty() ? 0.0 : a.alphas_im[i]);
      blocks[i] = sweep_one_alpha(params, alpha, a.point.x, a.horizons);
    }
  };
  unsigned threads = a.threads != 0 ? a.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, count));
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work, k, threads);
    work(0, threads);
  }

  std::vector<SweepRow> rows;
  bool any_error = false;
  for (auto& block : blocks) {
    for (auto& row : block) {
      any_error = any_error || !row.error.empty();
      rows.push_back(std::move(row));
    }
  }
  if (a.strict && any_error) {
    emit_error(out, Errc::out_of_domain, "sweep contains alpha values outside D");
    return kDomainError;
  }
  write_sweep(out, rows, a.format == "csv");
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact exponential transform of AR(1) sums of squares and its "
               "multiplicative-ergodicity constants"};
  app.require_subcommand(1);

  PointArgs point;
  std::size_t horizon = 0;
  auto* transform_cmd = app.add_subcommand("transform", "evaluate L_t(alpha, x)");
  add_model_flags(transform_cmd, point);
  transform_cmd->add_option("--alpha", point.alpha, "Re(alpha)")->required();
  transform_cmd->add_option("--alpha-im", point.alpha_im, "Im(alpha)")->capture_default_str();
  transform_cmd->add_option("--t", horizon, "horizon t >= 0")->required();

  PointArgs ergodic_point;
  auto* ergodic_cmd = app.add_subcommand("ergodic", "Lambda(alpha), f(alpha, x) and the rate");
  add_model_flags(ergodic_cmd, ergodic_point);
  ergodic_cmd->add_option("--alpha", ergodic_point.alpha, "Re(alpha)")->required();
  ergodic_cmd->add_option("--alpha-im", ergodic_point.alpha_im, "Im(alpha)")->capture_default_str();

  VerifyOptions verify_options;
  double tolerance = 0.0;
  auto* verify_cmd = app.add_subcommand("verify", "run the self-verification suite");
  verify_cmd->add_option("--grid-size", verify_options.grid_size, "alpha points per theta")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_options.seed, "Monte Carlo seed")->capture_default_str();
  verify_cmd->add_option("--mc-samples", verify_options.mc_samples, "Monte Carlo paths")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}))
      ->capture_default_str();
  auto* tolerance_opt =
      verify_cmd->add_option("--tolerance", tolerance, "override every deterministic tolerance");
  verify_cmd->add_option("--threads", verify_options.threads, "worker threads (0 = all cores)");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate over an alpha x t grid");
  add_model_flags(sweep_cmd, sweep.point);
  sweep_cmd->add_option("--alpha", sweep.alphas, "Re(alpha) values")->delimiter(',')->required();
  sweep_cmd->add_option("--alpha-im", sweep.alphas_im, "Im(alpha) values")->delimiter(',');
  sweep_cmd->add_option("--t", sweep.horizons, "horizons")->delimiter(',');
  sweep_cmd->add_option("--t-range", sweep.t_range, "inclusive horizon range FROM:TO");
  sweep_cmd->add_option("--format", sweep.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep_cmd->add_flag("--strict", sweep.strict, "exit 2 if any alpha is outside D");
  sweep_cmd->add_option("--threads", sweep.threads, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }
  if (tolerance_opt->count() > 0) verify_options.tolerance = tolerance;

  try {
    if (*transform_cmd) return cmd_transform(point, horizon, out);
    if (*ergodic_cmd) return cmd_ergodic(ergodic_point, out);
    if (*verify_cmd) return cmd_verify(verify_options, out);
    if (*sweep_cmd) return cmd_sweep(sweep, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    emit_error(out, e.code() == Errc::domain_boundary ? Errc::out_of_domain : e.code(), e.what());
    return exit_code_for(e.code());
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace ar1lt::cli
