#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include <ceres/ceres.h>

#include "otocspec/error.hpp"
#include "otocspec/qsp.hpp"
#include "otocspec/rng.hpp"
#include "otocspec/tolerances.hpp"

namespace otocspec {

namespace {

constexpr double kPi = std::numbers::pi;

// Mean squared error between Re(qsp_response) and the target on a theta grid.
class ResponseFit final : public ceres::FirstOrderFunction {
 public:
  ResponseFit(std::vector<double> thetas, std::vector<double> targets, int num_phases)
      : thetas_(std::move(thetas)), targets_(std::move(targets)), num_phases_(num_phases) {}

  bool Evaluate(const double* parameters, double* cost, double* gradient) const override {
    const PhaseSequence seq(std::vector<double>(parameters, parameters + num_phases_));
    const double norm = 1.0 / static_cast<double>(thetas_.size());
    double total = 0.0;
    if (gradient != nullptr) std::fill(gradient, gradient + num_phases_, 0.0);
    std::vector<std::complex<double>> dp;
    for (std::size_t g = 0; g < thetas_.size(); ++g) {
      double residual;
      if (gradient != nullptr) {
        residual = qsp_response_gradient(thetas_[g], seq, dp).real() - targets_[g];
        for (int k = 0; k < num_phases_; ++k) {
          gradient[k] += 2.0 * norm * residual * dp[static_cast<std::size_t>(k)].real();
        }
      } else {
        residual = qsp_response(thetas_[g], seq).real() - targets_[g];
      }
      total += residual * residual;
    }
    *cost = norm * total;
    return std::isfinite(*cost);
  }

  int NumParameters() const override { return num_phases_; }

 private:
  std::vector<double> thetas_;
  std::vector<double> targets_;
  int num_phases_;
};

struct Residuals {
  double max_abs = 0.0;
  double rms = 0.0;
};

Residuals check_residuals(const PhaseSequence& seq, const std::vector<double>& coeffs, int grid) {
  Residuals out;
  double sq = 0.0;
  for (int g = 0; g < grid; ++g) {
    const double theta = kPi * g / (grid - 1);
    const double r = qsp_response(theta, seq).real() - cosine_series(coeffs, theta);
    out.max_abs = std::max(out.max_abs, std::abs(r));
    sq += r * r;
  }
  out.rms = std::sqrt(sq / grid);
  return out;
}

struct RestartOutcome {
  std::vector<double> phases;
  Residuals residuals;
};

RestartOutcome run_restart(const std::vector<double>& coeffs, int depth,
                           const SynthesisOptions& options, int restart) {
  const int num_phases = 2 * depth + 1;
  const int grid = options.fit_grid > 1 ? options.fit_grid : 16 * depth + 1;
  std::vector<double> thetas(static_cast<std::size_t>(grid));
  std::vector<double> targets(static_cast<std::size_t>(grid));
  for (int g = 0; g < grid; ++g) {
    thetas[static_cast<std::size_t>(g)] = kPi * g / (grid - 1);
    targets[static_cast<std::size_t>(g)] = cosine_series(coeffs, thetas[static_cast<std::size_t>(g)]);
  }

  Philox rng(options.seed, static_cast<std::uint64_t>(restart));
  std::vector<double> phases = PhaseSequence::harmonic(depth).phases();
  for (double& p : phases) p += options.init_noise * rng.normal();

  ceres::GradientProblem problem(new ResponseFit(std::move(thetas), std::move(targets), num_phases));
  ceres::GradientProblemSolver::Options solver_options;
  solver_options.line_search_direction_type = ceres::LBFGS;
  solver_options.max_num_iterations = options.max_iterations;
  solver_options.function_tolerance = 1e-16;
  solver_options.gradient_tolerance = 1e-15;
  solver_options.parameter_tolerance = 1e-15;
  solver_options.logging_type = ceres::SILENT;
  solver_options.minimizer_progress_to_stdout = false;
  ceres::GradientProblemSolver::Summary summary;
  ceres::Solve(solver_options, problem, phases.data(), &summary);

  // Wrap into (-pi, pi]; the response is 2pi-periodic in each phase.
  for (double& p : phases) p = std::remainder(p, 2.0 * kPi);
  RestartOutcome out;
  out.residuals = check_residuals(PhaseSequence(phases), coeffs, options.check_grid);
  out.phases = std::move(phases);
  return out;
}

}  // namespace

SynthesisResult fit_phases(const std::vector<double>& target_coefficients, int depth,
                           const SynthesisOptions& options) {
  if (depth < 1) throw Error(ErrorCode::InvalidArgument, "synthesis depth must be >= 1");
  if (target_coefficients.empty() ||
      target_coefficients.size() > static_cast<std::size_t>(depth + 1)) {
    throw Error(ErrorCode::InvalidArgument,
                "target needs 1..d+1 cosine coefficients for depth " + std::to_string(depth));
  }
  if (options.restarts < 1 || options.check_grid < 2) {
    throw Error(ErrorCode::InvalidArgument, "synthesis needs >= 1 restart and >= 2 check points");
  }
  std::vector<double> coeffs = target_coefficients;
  coeffs.resize(static_cast<std::size_t>(depth + 1), 0.0);

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(options.restarts));
  const int workers = std::clamp(options.threads, 1, options.restarts);
  if (workers == 1) {
    for (int r = 0; r < options.restarts; ++r) {
      outcomes[static_cast<std::size_t>(r)] = run_restart(coeffs, depth, options, r);
    }
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int r = w; r < options.restarts; r += workers) {
          outcomes[static_cast<std::size_t>(r)] = run_restart(coeffs, depth, options, r);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  SynthesisResult result;
  result.target_coefficients = coeffs;
  result.seed = options.seed;
  for (int r = 0; r < options.restarts; ++r) {
    const auto& o = outcomes[static_cast<std::size_t>(r)];
    result.restart_max_residuals.push_back(o.residuals.max_abs);
    if (result.best_restart < 0 ||
        o.residuals.max_abs < outcomes[static_cast<std::size_t>(result.best_restart)].residuals.max_abs) {
      result.best_restart = r;
    }
  }
  const auto& best = outcomes[static_cast<std::size_t>(result.best_restart)];
  result.phases = PhaseSequence(best.phases);
  result.max_residual = best.residuals.max_abs;
  result.l2_residual = best.residuals.rms;
  return result;
}

SynthesisResult synthesize_phases(const FilterSpec& target, const SynthesisOptions& options) {
  const std::vector<double> coeffs = filter_target_coefficients(target);
  SynthesisResult result;
  const bool constant_one = coeffs[0] == 1.0 &&
                            std::all_of(coeffs.begin() + 1, coeffs.end(), [](double c) { return c == 0.0; });
  if (constant_one) {
    // All-pass: the zero sequence realizes the constant 1 exactly.
    result.phases = PhaseSequence::zeros(target.depth);
    result.target_coefficients = coeffs;
    result.seed = options.seed;
    const Residuals r = check_residuals(result.phases, coeffs, options.check_grid);
    result.max_residual = r.max_abs;
    result.l2_residual = r.rms;
  } else {
    result = fit_phases(coeffs, target.depth, options);
  }
  if (!(result.max_residual <= kTol.synthesis_max_residual)) {
    throw Error(ErrorCode::SynthesisFailed,
                "best max residual " + std::to_string(result.max_residual) + " exceeds " +
                    std::to_string(kTol.synthesis_max_residual));
  }
  return result;
}

}  // namespace otocspec
