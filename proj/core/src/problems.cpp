#include "mdhll/problems.hpp"

#include <cmath>
#include <numbers>

#include "mdhll/errors.hpp"

namespace mdhll {

Primitive explosion_init(double x, double y) {
  return {1.0, 0.0, 0.0, std::hypot(x, y) <= 0.1 ? 20.0 : 0.1};
}

Primitive sine_wave_exact(double x, double y, double t) {
  const double phase = 2.0 * std::numbers::pi * (x + y - 0.99 * std::numbers::sqrt2 * t);
  const double s = 0.99 / std::numbers::sqrt2;
  return {1.0 + 0.99999 * std::sin(phase), s, s, 0.01};
}

Primitive vortex_exact(double x, double y, double t) {
  constexpr double gamma = 1.4;
  constexpr double strength = 10.0828;
  const double w = 0.5 * std::numbers::sqrt2;
  const double gb = 1.0 / std::sqrt(1.0 - w * w);
  const double drift = gb * t * w / std::numbers::sqrt2;
  const double x0 = x + 0.5 * (gb - 1.0) * (x + y) + drift;
  const double y0 = y + 0.5 * (gb - 1.0) * (x + y) + drift;
  const double r2 = x0 * x0 + y0 * y0;

  const double alpha = (gamma - 1.0) / (8.0 * gamma * std::numbers::pi * std::numbers::pi) *
                       strength * strength;
  const double ae = alpha * std::exp(1.0 - r2);
  const double beta = 2.0 * gamma * ae / (2.0 * gamma - 1.0 - gamma * ae);
  const double f = std::sqrt(beta / (1.0 + beta * r2));
  const double u0 = -y0 * f;
  const double v0 = x0 * f;

  const double rho = std::pow(1.0 - ae, 1.0 / (gamma - 1.0));
  const double den = 1.0 - w * (u0 + v0) / std::numbers::sqrt2;
  const double common = -w / std::numbers::sqrt2 + gb * w * w / (2.0 * (gb + 1.0)) * (u0 + v0);
  return {rho, (u0 / gb + common) / den, (v0 / gb + common) / den, std::pow(rho, gamma)};
}

Primitive riemann1_init(double x, double y) {
  const bool right = x >= 0.5;
  const bool up = y >= 0.5;
  if (right && up) return {0.1, 0.0, 0.0, 0.01};
  if (up) return {0.1, 0.99, 0.0, 1.0};
  if (!right) return {0.5, 0.0, 0.0, 1.0};
  return {0.1, 0.0, 0.99, 1.0};
}

Primitive riemann2_init(double x, double y) {
  constexpr double rho_t = 0.00414329639576;
  constexpr double u_t = 0.9946418833556542;
  const bool right = x >= 0.5;
  const bool up = y >= 0.5;
  if (right && up) return {0.1, 0.0, 0.0, 20.0};
  if (up) return {rho_t, u_t, 0.0, 0.05};
  if (!right) return {0.01, 0.0, 0.0, 0.05};
  return {rho_t, 0.0, u_t, 0.05};
}

JetParameters jet_parameters(JetCase c, double gamma) {
  JetParameters j{};
  j.beam_speed = c == JetCase::I ? 0.99 : c == JetCase::II ? 0.999 : 0.9999;
  j.beam_density = 0.01;
  j.ambient_density = 1.0;
  j.mach = 1.72;
  j.sound_speed = j.beam_speed / j.mach;
  const double cs2 = j.sound_speed * j.sound_speed;
  if (!(cs2 < gamma - 1.0)) throw ConfigError("jet sound speed exceeds the Gamma-law limit");
  j.pressure = cs2 * j.beam_density * (gamma - 1.0) / (gamma * (gamma - 1.0 - cs2));
  j.lorentz = 1.0 / std::sqrt(1.0 - j.beam_speed * j.beam_speed);
  j.relativistic_mach = j.mach * j.lorentz * std::sqrt(1.0 - cs2);
  return j;
}

ProblemSpec jet_spec(JetCase c) {
  const JetParameters j = jet_parameters(c);
  ProblemSpec p;
  p.id = c == JetCase::I ? "jet-i" : c == JetCase::II ? "jet-ii" : "jet-iii";
  p.x0 = 0.0;
  p.x1 = 12.0;
  p.y0 = 0.0;
  p.y1 = 30.0;
  const Primitive ambient{j.ambient_density, 0.0, 0.0, j.pressure};
  const Primitive beam{j.beam_density, 0.0, j.beam_speed, j.pressure};
  p.init = [ambient](double, double) { return ambient; };
  p.bc.left = SideCondition::reflecting();
  p.bc.right = SideCondition::outflow();
  p.bc.top = SideCondition::outflow();
  p.bc.bottom = SideCondition::inflow_window(beam, -0.5, 0.5);
  p.t_end = 30.0;
  p.metadata = {{"beam_speed", j.beam_speed},
                {"beam_density", j.beam_density},
                {"ambient_density", j.ambient_density},
                {"mach", j.mach},
                {"pressure_derived", j.pressure},
                {"sound_speed", j.sound_speed},
                {"beam_lorentz", j.lorentz},
                {"relativistic_mach", j.relativistic_mach}};
  return p;
}

ProblemSpec make_problem(const std::string& id) {
  ProblemSpec p;
  p.id = id;
  if (id == "explosion") {
    p.x0 = p.y0 = -0.5;
    p.x1 = p.y1 = 0.5;
    p.init = explosion_init;
    p.bc = BoundarySpec::all(SideCondition::outflow());
    p.t_end = 0.1;
  } else if (id == "sine") {
    p.init = [](double x, double y) { return sine_wave_exact(x, y, 0.0); };
    p.exact = sine_wave_exact;
    p.bc = BoundarySpec::all(SideCondition::periodic());
    p.t_end = 0.1;
  } else if (id == "vortex") {
    p.x0 = p.y0 = -6.0;
    p.x1 = p.y1 = 6.0;
    p.gamma = 1.4;
    p.init = [](double x, double y) { return vortex_exact(x, y, 0.0); };
    p.exact = vortex_exact;
    p.bc = BoundarySpec::all(SideCondition::periodic());
    p.t_end = 1.0;
  } else if (id == "rp1" || id == "rp2") {
    p.init = id == "rp1" ? riemann1_init : riemann2_init;
    p.bc = BoundarySpec::all(SideCondition::outflow());
    p.t_end = 0.4;
  } else if (id == "jet-i") {
    return jet_spec(JetCase::I);
  } else if (id == "jet-ii") {
    return jet_spec(JetCase::II);
  } else if (id == "jet-iii") {
    return jet_spec(JetCase::III);
  } else {
    throw ConfigError("unknown problem '" + id + "'");
  }
  return p;
}

std::vector<std::string> problem_ids() {
  return {"explosion", "sine", "vortex", "rp1", "rp2", "jet-i", "jet-ii", "jet-iii"};
}

int ghosts_for_order(int order) {
  if (order == 1) return 1;
  if (order == 5) return 3;
  throw ConfigError("order must be 1 or 5");
}

Field initial_field(const ProblemSpec& p, int nx, int ny, int order) {
  p.bc.validate();
  Field f(Mesh(nx, ny, p.x0, p.x1, p.y0, p.y1), p.eos(), p.bc, ghosts_for_order(order));
  if (order == 1) {
    f.set_interior(p.init);
  } else {
    f.set_interior_averages(p.init, 5);
  }
  return f;
}

Field exact_field(const ProblemSpec& p, int nx, int ny, double t) {
  if (!p.has_exact()) throw ConfigError("problem '" + p.id + "' has no exact solution");
  Field f(Mesh(nx, ny, p.x0, p.x1, p.y0, p.y1), p.eos(), p.bc, 1);
  f.set_interior_averages([&](double x, double y) { return p.exact(x, y, t); }, 5);
  return f;
}

}  // namespace mdhll
