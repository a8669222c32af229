#include "mdhll/riemann.hpp"

#include <algorithm>

#include "mdhll/errors.hpp"

namespace mdhll {

namespace {

void require_alpha(double alpha) {
  if (!(alpha >= 1.0)) throw ContractError("wave-speed amplification must be >= 1");
}

// HLL combination with already clipped speeds lo <= 0 <= hi, lo < hi.
Flux hll_average(const Conserved& ul, const Conserved& ur, const Flux& fl, const Flux& fr,
                 double lo, double hi) {
  const double inv = 1.0 / (hi - lo);
  return inv * (hi * fl - lo * fr + lo * hi * (ur - ul));
}

Flux clipped_hll(const FluidState& l, const FluidState& r, Axis axis, double lo, double hi) {
  if (lo >= 0.0) return l.flux(axis);
  if (hi <= 0.0) return r.flux(axis);
  return hll_average(l.cons, r.cons, l.flux(axis), r.flux(axis), lo, hi);
}

// Clipped 2D corner flux along x; the y version is obtained by relabelling.
//   F* = (S_U+ F_U** - S_D- F_D** - 2 S_L- S_R+/(S_R+ - S_L-) (G_RU - G_RD - G_LU + G_LD))
//        / (S_U+ - S_D-)
Flux corner_flux_x(const Quadruple& q, const WaveFan2D& fan) {
  const double sl = std::min(fan.sL, 0.0);
  const double sr = std::max(fan.sR, 0.0);
  const double sd = std::min(fan.sD, 0.0);
  const double su = std::max(fan.sU, 0.0);
  const Flux upper = clipped_hll(q.lu, q.ru, Axis::X, fan.sL, fan.sR);
  const Flux lower = clipped_hll(q.ld, q.rd, Axis::X, fan.sL, fan.sR);
  const Flux cross = q.ru.fy - q.rd.fy - q.lu.fy + q.ld.fy;
  const double transverse = 2.0 * sl * sr / (sr - sl);
  return (su * upper - sd * lower - transverse * cross) / (su - sd);
}

Flux corner_flux_y(const Quadruple& q, const WaveFan2D& fan) {
  const double sl = std::min(fan.sL, 0.0);
  const double sr = std::max(fan.sR, 0.0);
  const double sd = std::min(fan.sD, 0.0);
  const double su = std::max(fan.sU, 0.0);
  const Flux right = clipped_hll(q.rd, q.ru, Axis::Y, fan.sD, fan.sU);
  const Flux left = clipped_hll(q.ld, q.lu, Axis::Y, fan.sD, fan.sU);
  const Flux cross = q.ru.fx - q.rd.fx - q.lu.fx + q.ld.fx;
  const double transverse = 2.0 * sd * su / (su - sd);
  return (sr * right - sl * left - transverse * cross) / (sr - sl);
}

}  // namespace

WaveSpeeds wave_speeds_1d(const FluidState& left, const FluidState& right, Axis axis,
                          double alpha) {
  require_alpha(alpha);
  const Eigenvalues& a = left.eig(axis);
  const Eigenvalues& b = right.eig(axis);
  return {alpha * std::min(a.min, b.min), alpha * std::max(a.max, b.max)};
}

WaveFan2D wave_fan_2d(const Quadruple& q, double alpha) {
  require_alpha(alpha);
  WaveFan2D fan;
  fan.sL = alpha * std::min({q.ld.ex.min, q.rd.ex.min, q.lu.ex.min, q.ru.ex.min});
  fan.sR = alpha * std::max({q.ld.ex.max, q.rd.ex.max, q.lu.ex.max, q.ru.ex.max});
  fan.sD = alpha * std::min({q.ld.ey.min, q.rd.ey.min, q.lu.ey.min, q.ru.ey.min});
  fan.sU = alpha * std::max({q.ld.ey.max, q.rd.ey.max, q.lu.ey.max, q.ru.ey.max});
  return fan;
}

Flux hll1d_flux(const FluidState& left, const FluidState& right, Axis axis,
                WaveSpeeds speeds) {
  return clipped_hll(left, right, axis, std::min(speeds.min, 0.0), std::max(speeds.max, 0.0));
}

Conserved hll1d_state(const FluidState& left, const FluidState& right, Axis axis,
                      WaveSpeeds speeds) {
  if (!(speeds.min < 0.0 && 0.0 < speeds.max)) {
    throw ContractError("hll1d_state needs speeds with min < 0 < max");
  }
  return (speeds.max * right.cons - speeds.min * left.cons + left.flux(axis) -
          right.flux(axis)) /
         (speeds.max - speeds.min);
}

Conserved hll2d_state(const Quadruple& q, const WaveFan2D& fan) {
  if (!fan.nontrivial()) {
    throw ContractError("hll2d_state needs sL < 0 < sR and sD < 0 < sU");
  }
  const double area = (fan.sR - fan.sL) * (fan.sU - fan.sD);
  const Conserved states = fan.sR * fan.sU * q.ru.cons + fan.sL * fan.sD * q.ld.cons -
                           fan.sR * fan.sD * q.rd.cons - fan.sL * fan.sU * q.lu.cons;
  const Flux fx = fan.sU * (q.ru.fx - q.lu.fx) - fan.sD * (q.rd.fx - q.ld.fx);
  const Flux gy = fan.sR * (q.ru.fy - q.rd.fy) - fan.sL * (q.lu.fy - q.ld.fy);
  return (states - fx - gy) / area;
}

Flux hll2d_flux(const Quadruple& q, const WaveFan2D& fan, Axis axis) {
  return axis == Axis::X ? corner_flux_x(q, fan) : corner_flux_y(q, fan);
}

CornerSolution solve_corner(const Quadruple& q, double alpha) {
  CornerSolution s;
  s.fan = wave_fan_2d(q, alpha);
  s.f = corner_flux_x(q, s.fan);
  s.g = corner_flux_y(q, s.fan);
  return s;
}

}  // namespace mdhll
