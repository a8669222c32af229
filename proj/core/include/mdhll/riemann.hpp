#pragma once

// One- and two-dimensional HLL Riemann solvers.
//
// The 2D solver works on the four quadrant states meeting at a mesh node and
// produces the intermediate state U* plus the corner fluxes F* and G*. Wave
// speeds are the extreme eigenvalues over the participating states, scaled
// by an amplification factor alpha >= 1 (alpha = 2 makes U* admissible for
// any admissible input).

#include "mdhll/state.hpp"

namespace mdhll {

struct WaveSpeeds {
  double min = 0.0;
  double max = 0.0;
};

/// Directional extreme speeds of a 2D Riemann fan.
struct WaveFan2D {
  double sL = 0.0;
  double sR = 0.0;
  double sD = 0.0;
  double sU = 0.0;

  /// sL < 0 < sR and sD < 0 < sU: the genuinely two-dimensional case.
  bool nontrivial() const { return sL < 0.0 && 0.0 < sR && sD < 0.0 && 0.0 < sU; }
};

/// Quadrant states around a node: left/right in x, down/up in y.
struct Quadruple {
  FluidState ld;
  FluidState lu;
  FluidState rd;
  FluidState ru;
};

/// Amplification that guarantees admissible intermediate states.
inline constexpr double kPcpAlpha = 2.0;

/// (alpha * min of lambda_min, alpha * max of lambda_max) over the pair.
WaveSpeeds wave_speeds_1d(const FluidState& left, const FluidState& right, Axis axis,
                          double alpha);

WaveFan2D wave_fan_2d(const Quadruple& q, double alpha);

/// Standard HLL flux with sign-clipped speeds: F(left) when speeds.min >= 0,
/// F(right) when speeds.max <= 0, the HLL average otherwise.
Flux hll1d_flux(const FluidState& left, const FluidState& right, Axis axis,
                WaveSpeeds speeds);

/// HLL intermediate state (S_R U_R - S_L U_L + F_L - F_R) / (S_R - S_L).
/// Requires speeds.min < 0 < speeds.max (ContractError otherwise).
Conserved hll1d_state(const FluidState& left, const FluidState& right, Axis axis,
                      WaveSpeeds speeds);

/// Intermediate state of the 2D HLL fan. Requires fan.nontrivial(); one-signed
/// fans reduce to the 1D solver and must be routed there by the caller.
Conserved hll2d_state(const Quadruple& q, const WaveFan2D& fan);

/// Corner flux F* (Axis::X) or G* (Axis::Y) with speeds clipped at zero, valid
/// for every sign pattern of the fan.
Flux hll2d_flux(const Quadruple& q, const WaveFan2D& fan, Axis axis);

/// Fan and both corner fluxes of one node, sharing the sub-flux work.
struct CornerSolution {
  WaveFan2D fan;
  Flux f;
  Flux g;
};

CornerSolution solve_corner(const Quadruple& q, double alpha);

}  // namespace mdhll
