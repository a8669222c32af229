#pragma once

// Initial data, boundary conditions and exact solutions of the test problems:
// explosion, sine, vortex, rp1, rp2, jet-i, jet-ii, jet-iii.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mdhll/grid.hpp"

namespace mdhll {

struct ProblemSpec {
  std::string id;
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  double gamma = 5.0 / 3.0;
  std::function<Primitive(double x, double y)> init;
  BoundarySpec bc;
  /// Empty for problems without a closed-form solution.
  std::function<Primitive(double x, double y, double t)> exact;
  double t_end = 0.0;
  /// Derived constants worth recording with a run (jet pressure, ...).
  std::map<std::string, double> metadata;

  bool has_exact() const { return static_cast<bool>(exact); }
  Eos eos() const { return Eos{gamma}; }
};

/// Unit density at rest, p = 20 in the closed disk r <= 0.1, 0.1 outside.
Primitive explosion_init(double x, double y);

/// rho = 1 + 0.99999 sin(2 pi (x + y - 0.99 sqrt2 t)), u = v = 0.99/sqrt2, p = 0.01.
Primitive sine_wave_exact(double x, double y, double t);

/// Isentropic vortex drifting with speed w = 0.5 sqrt2 towards (-1, -1);
/// Gamma = 1.4, strength 10.0828.
Primitive vortex_exact(double x, double y, double t);

/// Quadrant data about (0.5, 0.5); x = 0.5 and y = 0.5 bind to the right and
/// upper quadrants.
Primitive riemann1_init(double x, double y);
Primitive riemann2_init(double x, double y);

enum class JetCase { I, II, III };

struct JetParameters {
  double beam_speed;
  double beam_density = 0.01;
  double ambient_density = 1.0;
  double mach = 1.72;
  /// Beam and ambient pressure from c_s = v_b / M_b and c_s^2 = Gamma p / (rho_b h_b).
  double pressure;
  double sound_speed;
  double lorentz;
  /// M_b gamma_b / gamma_s.
  double relativistic_mach;
};

JetParameters jet_parameters(JetCase c, double gamma = 5.0 / 3.0);
ProblemSpec jet_spec(JetCase c);

/// Throws ConfigError for an unknown id.
ProblemSpec make_problem(const std::string& id);
std::vector<std::string> problem_ids();

/// Ghost layers needed by a scheme of the given order (1 or 5).
int ghosts_for_order(int order);

/// Field on an nx x ny mesh holding the initial cell averages: centre values
/// for order 1, 5 x 5 Gauss averages for order 5.
Field initial_field(const ProblemSpec& p, int nx, int ny, int order);

/// Field of Gauss-averaged exact states at time t (ConfigError without an
/// exact solution).
Field exact_field(const ProblemSpec& p, int nx, int ny, double t);

}  // namespace mdhll
