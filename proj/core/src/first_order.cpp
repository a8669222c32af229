#include "mdhll/first_order.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mdhll/errors.hpp"

namespace mdhll {

namespace {

// c * s_lo * F*(lower corner) - c * s_hi * F*(upper corner)
//   + (1 - c (s_lo - s_hi)) * F**
// where s_lo is the clipped upward speed of the lower corner and s_hi the
// clipped downward speed of the upper corner (x-edges; y-edges relabel).
Flux assemble(const Flux& edge, const Flux& lower, double s_lo, const Flux& upper, double s_hi,
              double c) {
  const double weight = 1.0 - c * (s_lo - s_hi);
  if (weight < 0.0) {
    throw ContractError("time step too large for the edge-flux assembly");
  }
  return (c * s_lo) * lower - (c * s_hi) * upper + weight * edge;
}

Quadruple quadruple_at(const StateGrid& s, int i, int j) {
  return {s(i, j), s(i, j + 1), s(i + 1, j), s(i + 1, j + 1)};
}

Quadruple quadruple_at(const Field& f, int i, int j) {
  const Eos& eos = f.eos();
  return {FluidState::from_conserved(f(i, j), eos), FluidState::from_conserved(f(i, j + 1), eos),
          FluidState::from_conserved(f(i + 1, j), eos),
          FluidState::from_conserved(f(i + 1, j + 1), eos)};
}

std::string describe_failure(const Conserved& u) {
  std::ostringstream os;
  os.precision(17);
  os << "D=" << u.D << ", q=" << q_value(u);
  return os.str();
}

}  // namespace

double compute_dt_first(const Field& field, double sigma) {
  const Mesh& mesh = field.mesh();
  double rate = 0.0;
  for (int j = 0; j < field.ny(); ++j) {
    for (int i = 0; i < field.nx(); ++i) {
      const Primitive w = recover_primitive(field(i, j), field.eos());
      const double ax = spectral_radius(w, field.eos(), Axis::X);
      const double ay = spectral_radius(w, field.eos(), Axis::Y);
      if (!std::isfinite(ax) || !std::isfinite(ay)) {
        throw NumericalError("non-finite wave speed in cell (" + std::to_string(i) + ", " +
                             std::to_string(j) + ")");
      }
      rate = std::max({rate, ax / mesh.dx(), ay / mesh.dy()});
    }
  }
  if (!(rate > 0.0)) throw NumericalError("vanishing wave speeds; time step undefined");
  return sigma / rate;
}

Flux edge_flux_x(const Field& field, int i, int j, double dt, double alpha) {
  const Quadruple below = quadruple_at(field, i, j - 1);
  const Quadruple above = quadruple_at(field, i, j);
  const CornerSolution lo = solve_corner(below, alpha);
  const CornerSolution hi = solve_corner(above, alpha);
  const FluidState& l = above.ld;
  const FluidState& r = above.rd;
  const Flux edge = hll1d_flux(l, r, Axis::X, wave_speeds_1d(l, r, Axis::X, alpha));
  const double c = dt / (2.0 * field.mesh().dy());
  return assemble(edge, lo.f, std::max(lo.fan.sU, 0.0), hi.f, std::min(hi.fan.sD, 0.0), c);
}

Flux edge_flux_y(const Field& field, int i, int j, double dt, double alpha) {
  const Quadruple left = quadruple_at(field, i - 1, j);
  const Quadruple right = quadruple_at(field, i, j);
  const CornerSolution lo = solve_corner(left, alpha);
  const CornerSolution hi = solve_corner(right, alpha);
  const FluidState& d = right.ld;
  const FluidState& u = right.lu;
  const Flux edge = hll1d_flux(d, u, Axis::Y, wave_speeds_1d(d, u, Axis::Y, alpha));
  const double c = dt / (2.0 * field.mesh().dx());
  return assemble(edge, lo.g, std::max(lo.fan.sR, 0.0), hi.g, std::min(hi.fan.sL, 0.0), c);
}

StepStats step_first_order(Field& field, double dt, const FirstOrderOptions& options) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ContractError("time step must be positive");
  fill_ghosts(field);
  const int nx = field.nx();
  const int ny = field.ny();
  const StateGrid s(field, 1);
  const double alpha = options.alpha;
  const bool two_d = options.riemann == RiemannMode::TwoD;

  StepStats stats;
  stats.dt = dt;

  // Corner solutions at node (a + 1/2, b + 1/2), a in [-1, nx-1], b in [-1, ny-1].
  const int nw = nx + 1;
  std::vector<CornerSolution> corners;
  if (two_d) {
    corners.resize(static_cast<std::size_t>(nw) * (ny + 1));
    for (int b = -1; b < ny; ++b) {
      for (int a = -1; a < nx; ++a) {
        CornerSolution& cs = corners[static_cast<std::size_t>(b + 1) * nw + (a + 1)];
        cs = solve_corner(quadruple_at(s, a, b), alpha);
        ++stats.corners;
        if (!cs.fan.nontrivial()) ++stats.degenerate_corners;
      }
    }
  }
  auto corner = [&](int a, int b) -> const CornerSolution& {
    return corners[static_cast<std::size_t>(b + 1) * nw + (a + 1)];
  };

  const double cx = dt / (2.0 * field.mesh().dy());
  const double cy = dt / (2.0 * field.mesh().dx());

  // x-edge (i + 1/2, j) stored at index j * nw + (i + 1), i in [-1, nx-1].
  std::vector<Flux> fx(static_cast<std::size_t>(nw) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = -1; i < nx; ++i) {
      const FluidState& l = s(i, j);
      const FluidState& r = s(i + 1, j);
      Flux f = hll1d_flux(l, r, Axis::X, wave_speeds_1d(l, r, Axis::X, alpha));
      if (two_d) {
        const CornerSolution& lo = corner(i, j - 1);
        const CornerSolution& hi = corner(i, j);
        f = assemble(f, lo.f, std::max(lo.fan.sU, 0.0), hi.f, std::min(hi.fan.sD, 0.0), cx);
      }
      fx[static_cast<std::size_t>(j) * nw + (i + 1)] = f;
    }
  }

  // y-edge (i, j + 1/2) stored at index (j + 1) * nx + i, j in [-1, ny-1].
  std::vector<Flux> gy(static_cast<std::size_t>(nx) * (ny + 1));
  for (int j = -1; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const FluidState& d = s(i, j);
      const FluidState& u = s(i, j + 1);
      Flux g = hll1d_flux(d, u, Axis::Y, wave_speeds_1d(d, u, Axis::Y, alpha));
      if (two_d) {
        const CornerSolution& lo = corner(i - 1, j);
        const CornerSolution& hi = corner(i, j);
        g = assemble(g, lo.g, std::max(lo.fan.sR, 0.0), hi.g, std::min(hi.fan.sL, 0.0), cy);
      }
      gy[static_cast<std::size_t>(j + 1) * nx + i] = g;
    }
  }

  const double lx = dt / field.mesh().dx();
  const double ly = dt / field.mesh().dy();
  std::vector<Conserved> next(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Flux& fr = fx[static_cast<std::size_t>(j) * nw + (i + 1)];
      const Flux& fl = fx[static_cast<std::size_t>(j) * nw + i];
      const Flux& gt = gy[static_cast<std::size_t>(j + 1) * nx + i];
      const Flux& gb = gy[static_cast<std::size_t>(j) * nx + i];
      const Conserved u = field(i, j) - lx * (fr - fl) - ly * (gt - gb);
      if (!is_admissible(u)) throw PcpFailure(i, j, describe_failure(u));
      next[static_cast<std::size_t>(j) * nx + i] = u;
    }
  }

  stats.min_density = std::numeric_limits<double>::infinity();
  stats.min_q = std::numeric_limits<double>::infinity();
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Conserved& u = next[static_cast<std::size_t>(j) * nx + i];
      field(i, j) = u;
      stats.min_density = std::min(stats.min_density, u.D);
      stats.min_q = std::min(stats.min_q, q_value(u));
    }
  }
  return stats;
}

}  // namespace mdhll
