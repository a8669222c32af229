#pragma once

// Fifth-order finite-volume scheme: WENO point values at Gauss-Lobatto
// nodes, edge fluxes mixing 2D HLL corner fluxes (endpoint nodes) with 1D
// HLL fluxes (interior nodes), a Lax-Friedrichs fallback flux with the
// two-stage PCP flux limiter, and SSP-RK3 in time.

#include <vector>

#include "mdhll/first_order.hpp"
#include "mdhll/reconstruction.hpp"

namespace mdhll {

struct HighOrderOptions {
  double alpha = kPcpAlpha;
  /// OneD uses 1D HLL fluxes at every node, the endpoints included.
  RiemannMode riemann = RiemannMode::TwoD;
  WenoMode weno = WenoMode::Characteristic;
  int K = 4;
  /// Toggles both the scaling limiter and the flux limiter.
  bool pcp = true;
  double eps_d = 1e-14;
  double eps_q = 1e-14;
  double scaling_floor = kScalingFloor;
};

/// Limiter activity, accumulated over stages and steps.
struct LimiterStats {
  long cells = 0;
  long scaled_cells = 0;  ///< scaling limiter active on the cell's point values
  long edges = 0;
  long limited_edges = 0;    ///< theta^D * theta^q < 1
  long limited_edges_d = 0;  ///< theta^D < 1
  long limited_edges_q = 0;  ///< theta^q < 1
  /// Stages whose dt exceeded the Lax-Friedrichs step bound of that stage.
  long stage_dt_violations = 0;

  double scaling_fraction() const { return cells > 0 ? double(scaled_cells) / cells : 0.0; }
  double flux_fraction() const { return edges > 0 ? double(limited_edges) / edges : 0.0; }

  LimiterStats& operator+=(const LimiterStats& o);
};

/// (U_L, U_R) -> 1/2 (F(U_L) + F(U_R) - a (U_R - U_L)), a the larger
/// spectral radius of the pair.
Flux low_order_lf_flux(const FluidState& left, const FluidState& right, Axis axis);

/// 1/4 min over edges (boundary edges included) of dx / a and dy / b, with a,
/// b the Lax-Friedrichs speeds of the edge. Ghosts must be filled.
double lf_step_bound(const Field& field);

/// min(compute_dt_first(field, sigma), lf_step_bound(field)); fills a copy's
/// ghosts when needed, so the field may be passed as is.
double compute_dt_high(const Field& field, double sigma);

struct LimitedFlux {
  Flux flux;
  double theta_d = 1.0;
  double theta_q = 1.0;
};

/// Two-stage PCP flux limiter for one edge. `lower` and `upper` are the cell
/// averages on both sides (left/right or down/up) and lambda = 4 dt / h. The
/// limited flux keeps U_lower - lambda F and U_upper + lambda F above the
/// floors. Throws PcpFailure (cell -1, -1) when the low-order states violate
/// them, which signals a too large dt.
LimitedFlux pcp_flux_limiter(const Flux& high, const Flux& low, const Conserved& lower,
                             const Conserved& upper, double lambda, double eps_d, double eps_q);

/// Edge fluxes of one forward-Euler stage. fx has (nx + 1) * ny entries with
/// fx[j * (nx + 1) + (i + 1)] the flux through (i + 1/2, j), i = -1..nx-1;
/// gy has nx * (ny + 1) entries with gy[(j + 1) * nx + i] the flux through
/// (i, j + 1/2).
struct EdgeFluxSet {
  std::vector<Flux> fx;
  std::vector<Flux> gy;
  long corners = 0;
  long degenerate_corners = 0;
};

/// Ghosts must be filled (field.ghosts() >= 3). Throws PcpFailure when a
/// cell average, or with PCP off a point value, is inadmissible.
EdgeFluxSet compute_edge_fluxes(const Field& field, double dt, const HighOrderOptions& options,
                                LimiterStats& stats);

/// U <- U - dt/dx (F_{i+1/2} - F_{i-1/2}) - dt/dy (G_{j+1/2} - G_{j-1/2}).
void apply_fluxes(Field& field, const EdgeFluxSet& fluxes, double dt);

/// Three-stage SSP Runge-Kutta step. Every stage output is checked; a
/// failure raises PcpFailure naming the cell and the stage.
StepStats step_ssp_rk3(Field& field, double dt, const HighOrderOptions& options,
                       LimiterStats& stats);

}  // namespace mdhll
