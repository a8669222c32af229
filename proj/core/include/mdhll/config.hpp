#pragma once

// Run configuration: a flat JSON document plus key=value overrides.

#include <optional>
#include <string>
#include <vector>

#include "mdhll/first_order.hpp"
#include "mdhll/reconstruction.hpp"

namespace mdhll {

enum class OutputFormat { Csv, Vtk };

struct RunConfig {
  std::string problem = "sine";
  int nx = 40;
  int ny = 40;
  double cfl = 0.45;
  /// 1 or 5.
  int order = 1;
  RiemannMode riemann = RiemannMode::TwoD;
  double alpha = kPcpAlpha;
  /// Scaling and flux limiters of the fifth-order scheme; the first-order
  /// scheme has no limiter to switch.
  bool pcp = true;
  /// Unset means the problem's default end time.
  std::optional<double> t_end;
  /// Times at which snapshots are written; the final state is always written.
  std::vector<double> snapshot_times;
  std::string output_dir = "out";
  OutputFormat format = OutputFormat::Csv;
  WenoMode weno = WenoMode::Characteristic;
  /// Gauss-Lobatto nodes per edge for the fifth-order scheme.
  int quad_nodes = 4;
  /// dt <- dt^(5/3) so that time errors match the fifth-order spatial errors.
  bool dt_shrink = false;
  /// Safety cap on the number of steps; 0 means no cap.
  long max_steps = 0;

  /// Throws ConfigError on inconsistent values.
  void validate() const;

  /// Applies one "key=value" override; the value is read as JSON when it
  /// parses and as a string otherwise. Throws ConfigError on unknown keys.
  void apply_override(const std::string& assignment);
};

/// Throws ConfigError on unknown keys, type mismatches and invalid values.
RunConfig config_from_json(const std::string& text);
std::string config_to_json(const RunConfig& config, int indent = 2);

/// Reads a config file. A run manifest is accepted too: its "config" object
/// is used, so a manifest reproduces its run.
RunConfig load_config(const std::string& path);

}  // namespace mdhll
