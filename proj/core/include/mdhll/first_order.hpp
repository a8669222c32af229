#pragma once

// First-order finite-volume scheme whose edge fluxes combine the 1D HLL flux
// at the edge midpoint with the 2D HLL corner fluxes at both edge endpoints.

#include "mdhll/grid.hpp"
#include "mdhll/riemann.hpp"

namespace mdhll {

/// OneD drops the corner contributions (edge flux = 1D HLL flux), which
/// turns the scheme into the plain dimension-by-dimension HLL scheme.
enum class RiemannMode { OneD, TwoD };

struct StepStats {
  double dt = 0.0;
  double min_density = 0.0;
  double min_q = 0.0;
  /// Corners whose fan is one-signed in at least one direction.
  long degenerate_corners = 0;
  long corners = 0;
};

struct FirstOrderOptions {
  double alpha = kPcpAlpha;
  RiemannMode riemann = RiemannMode::TwoD;
};

/// dt = sigma * min over interior cells of dx / rho_x and dy / rho_y, with
/// rho the spectral radius. Throws NumericalError for non-finite speeds.
double compute_dt_first(const Field& field, double sigma);

/// Assembled flux through the x-edge between cells (i, j) and (i+1, j) for a
/// step of size dt. Ghosts must be filled. Throws ContractError when dt makes
/// the weight of the 1D flux negative.
Flux edge_flux_x(const Field& field, int i, int j, double dt, double alpha);

/// Assembled flux through the y-edge between cells (i, j) and (i, j+1).
Flux edge_flux_y(const Field& field, int i, int j, double dt, double alpha);

/// One forward-Euler step of the first-order scheme; fills ghosts itself.
/// Throws PcpFailure naming the first inadmissible cell of the new field.
StepStats step_first_order(Field& field, double dt, const FirstOrderOptions& options = {});

}  // namespace mdhll
