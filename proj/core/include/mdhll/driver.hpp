#pragma once

// Simulation driver: time loop, run artifacts (snapshots, statistics log,
// manifest) and the convergence harness.

#include <functional>
#include <string>
#include <vector>

#include "mdhll/config.hpp"
#include "mdhll/high_order.hpp"
#include "mdhll/problems.hpp"

namespace mdhll {

/// Exit codes of a run.
enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitPcp = 3, kExitNumerical = 4 };

struct StepRecord {
  long step = 0;
  double t = 0.0;  ///< time after the step
  double dt = 0.0;
  double min_rho = 0.0;
  double min_p = 0.0;
  /// Fractions of this step's cells (scaling limiter) and edges (flux
  /// limiter) that were limited, over all RK stages.
  double theta_scaling = 0.0;
  double theta_flux = 0.0;
  long corners = 0;
  long degenerate_corners = 0;
};

/// A field being advanced in time.
struct Simulation {
  ProblemSpec problem;
  RunConfig config;
  Field field;
  double t = 0.0;
  long step = 0;
  LimiterStats limiter;

  /// Validates the config and builds the initial field.
  explicit Simulation(const RunConfig& config);

  double end_time() const { return config.t_end.value_or(problem.t_end); }

  /// Step size before clipping to output times.
  double stable_dt() const;

  /// One step of size dt; throws PcpFailure / NumericalError / DomainError.
  StepRecord advance(double dt);

  /// Steps until t_stop (landing on it exactly), calling on_step after each.
  /// Throws NumericalError when max_steps is exceeded.
  void run_until(double t_stop, const std::function<void(const StepRecord&)>& on_step = {});
};

/// Smallest recovered pressure over the interior.
double min_pressure(const Field& field);

struct RunResult {
  int exit_code = kExitOk;
  std::string message;
  long steps = 0;
  double t = 0.0;
  std::vector<std::string> snapshots;
};

/// Runs a config to its end time, writing into config.output_dir:
/// snapshot files, stats.csv (one row per step) and manifest.json. Errors
/// are reported through the exit code and message, never thrown.
RunResult run(const RunConfig& config);

struct ConvergenceRow {
  int n = 0;
  double l1 = 0.0, l2 = 0.0, linf = 0.0;
  /// log2(e_{N/2} / e_N); NaN on the first row.
  double l1_order = 0.0, l2_order = 0.0, linf_order = 0.0;
  /// Limiter percentages over all time levels.
  double theta_scaling = 0.0, theta_flux = 0.0;
  long steps = 0;
};

/// Density errors at the end time on N x N meshes: rho recovered from the
/// numerical cell averages against rho recovered from the Gauss-averaged
/// exact state. Throws ConfigError for problems without an exact solution.
std::vector<ConvergenceRow> convergence(const RunConfig& config, const std::vector<int>& meshes);

std::string format_convergence_table(const std::vector<ConvergenceRow>& rows);
std::string convergence_to_json(const std::vector<ConvergenceRow>& rows);

}  // namespace mdhll
