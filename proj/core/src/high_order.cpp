#include "mdhll/high_order.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mdhll/errors.hpp"

namespace mdhll {

namespace {

constexpr double kRound = 16.0 * std::numeric_limits<double>::epsilon();

FluidState point_state(const Conserved& u, const Eos& eos, int i, int j) {
  try {
    return FluidState::from_conserved(u, eos);
  } catch (const DomainError&) {
    throw PcpFailure(i, j, "reconstructed point value is inadmissible");
  }
}

// theta such that (1 - theta) low + theta high = floor, or 1 when high
// already clears the floor.
double blend_factor(double low, double high, double floor) {
  if (!(high < floor)) return 1.0;
  const double den = low - high;
  if (!(den > 0.0)) return 1.0;
  return std::clamp((low - floor) / den, 0.0, 1.0);
}

}  // namespace

LimiterStats& LimiterStats::operator+=(const LimiterStats& o) {
  cells += o.cells;
  scaled_cells += o.scaled_cells;
  edges += o.edges;
  limited_edges += o.limited_edges;
  limited_edges_d += o.limited_edges_d;
  limited_edges_q += o.limited_edges_q;
  stage_dt_violations += o.stage_dt_violations;
  return *this;
}

Flux low_order_lf_flux(const FluidState& left, const FluidState& right, Axis axis) {
  const Eigenvalues el = axis == Axis::X ? left.ex : left.ey;
  const Eigenvalues er = axis == Axis::X ? right.ex : right.ey;
  const double a = std::max({std::abs(el.min), std::abs(el.max), std::abs(er.min), std::abs(er.max)});
  const Flux& fl = axis == Axis::X ? left.fx : left.fy;
  const Flux& fr = axis == Axis::X ? right.fx : right.fy;
  return 0.5 * (fl + fr - a * (right.cons - left.cons));
}

double lf_step_bound(const Field& field) {
  const int nx = field.nx();
  const int ny = field.ny();
  const StateGrid s(field, 1);
  double rate = 0.0;
  for (int j = 0; j < ny; ++j) {
    for (int i = -1; i < nx; ++i) {
      const double a = std::max(spectral_radius(s(i, j).prim, field.eos(), Axis::X),
                                spectral_radius(s(i + 1, j).prim, field.eos(), Axis::X));
      rate = std::max(rate, a / field.mesh().dx());
    }
  }
  for (int j = -1; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const double b = std::max(spectral_radius(s(i, j).prim, field.eos(), Axis::Y),
                                spectral_radius(s(i, j + 1).prim, field.eos(), Axis::Y));
      rate = std::max(rate, b / field.mesh().dy());
    }
  }
  if (!(rate > 0.0) || !std::isfinite(rate)) throw NumericalError("invalid Lax-Friedrichs speeds");
  return 0.25 / rate;
}

double compute_dt_high(const Field& field, double sigma) {
  Field copy = field;
  fill_ghosts(copy);
  return std::min(compute_dt_first(copy, sigma), lf_step_bound(copy));
}

LimitedFlux pcp_flux_limiter(const Flux& high, const Flux& low, const Conserved& lower,
                             const Conserved& upper, double lambda, double eps_d, double eps_q) {
  const Conserved lo_low = lower - lambda * low;
  const Conserved up_low = upper + lambda * low;

  // The floors get a few roundoffs of the magnitudes involved on top, so that
  // rounding in the blended states cannot undo the limiting. Where the
  // low-order state itself sits below that, half of it is the floor, which
  // keeps theta in [0, 1] without blending away positive high-order states.
  auto floor_for = [&](double eps, double low_min, double magnitude) {
    if (!(low_min > 0.0)) throw PcpFailure(-1, -1, "low-order state inadmissible; dt too large");
    return std::min(eps + kRound * magnitude, 0.5 * low_min);
  };
  const double mag_d = std::abs(lower.D) + std::abs(upper.D) +
                       lambda * (std::abs(high.D) + std::abs(low.D));
  const double floor_d = floor_for(eps_d, std::min(lo_low.D, up_low.D), mag_d);

  LimitedFlux out;
  out.theta_d = std::min(blend_factor(lo_low.D, lower.D - lambda * high.D, floor_d),
                         blend_factor(up_low.D, upper.D + lambda * high.D, floor_d));
  Flux fd = high;
  fd.D = (1.0 - out.theta_d) * low.D + out.theta_d * high.D;

  const double q_lo_low = q_value(lo_low);
  const double q_up_low = q_value(up_low);
  const double mag_q = std::abs(lower.E) + std::abs(upper.E) +
                       lambda * (std::abs(high.E) + std::abs(low.E));
  const double floor_q = floor_for(eps_q, std::min(q_lo_low, q_up_low), mag_q);
  out.theta_q = std::min(blend_factor(q_lo_low, q_value(lower - lambda * fd), floor_q),
                         blend_factor(q_up_low, q_value(upper + lambda * fd), floor_q));
  out.flux = (1.0 - out.theta_q) * low + out.theta_q * fd;
  return out;
}

EdgeFluxSet compute_edge_fluxes(const Field& field, double dt, const HighOrderOptions& opt,
                                LimiterStats& stats) {
  const int nx = field.nx();
  const int ny = field.ny();
  const Eos& eos = field.eos();
  const GaussLobattoRule rule = GaussLobattoRule::make(opt.K);
  const int K = rule.K;
  const std::vector<double>& w = rule.weights;

  for (int j = -1; j <= ny; ++j) {
    for (int i = -1; i <= nx; ++i) {
      if (!is_admissible(field(i, j))) throw PcpFailure(i, j, "cell average is inadmissible");
    }
  }

  CellPointValues pv = reconstruct_quadrature_states(field, rule, opt.weno);

  if (opt.pcp) {
    for (int j = -1; j <= ny; ++j) {
      for (int i = -1; i <= nx; ++i) {
        const Conserved& avg = field(i, j);
        std::vector<Conserved> pts = pv.distinct(i, j);
        const double eps_d = std::min(opt.scaling_floor, 0.5 * avg.D);
        const double eps_q = std::min(opt.scaling_floor, 0.5 * q_value(avg));
        const ScalingResult r = scaling_pcp_limit(pts, avg, eps_d, eps_q);
        if (r.active()) pv.assign_distinct(i, j, pts);
        if (i >= 0 && i < nx && j >= 0 && j < ny) {
          ++stats.cells;
          if (r.active()) ++stats.scaled_cells;
        }
      }
    }
  }

  EdgeFluxSet out;
  out.fx.assign(static_cast<std::size_t>(nx + 1) * ny, Flux{});
  out.gy.assign(static_cast<std::size_t>(nx) * (ny + 1), Flux{});

  const bool two_d = opt.riemann == RiemannMode::TwoD;
  std::vector<CornerSolution> corners;
  auto corner = [&](int a, int b) -> const CornerSolution& {
    return corners[static_cast<std::size_t>(b + 1) * (nx + 1) + (a + 1)];
  };
  if (two_d) {
    corners.resize(static_cast<std::size_t>(nx + 1) * (ny + 1));
    for (int b = -1; b < ny; ++b) {
      for (int a = -1; a < nx; ++a) {
        const Quadruple q{point_state(pv.at(a, b, EdgeSide::Top, K - 1), eos, a, b),
                          point_state(pv.at(a, b + 1, EdgeSide::Bottom, K - 1), eos, a, b + 1),
                          point_state(pv.at(a + 1, b, EdgeSide::Top, 0), eos, a + 1, b),
                          point_state(pv.at(a + 1, b + 1, EdgeSide::Bottom, 0), eos, a + 1, b + 1)};
        CornerSolution& c = corners[static_cast<std::size_t>(b + 1) * (nx + 1) + (a + 1)];
        c = solve_corner(q, opt.alpha);
        ++out.corners;
        if (!c.fan.nontrivial()) ++out.degenerate_corners;
      }
    }
  }

  auto node_flux = [&](const Conserved& l, int li, int lj, const Conserved& r, int ri, int rj,
                       Axis axis) {
    const FluidState sl = point_state(l, eos, li, lj);
    const FluidState sr = point_state(r, eos, ri, rj);
    return hll1d_flux(sl, sr, axis, wave_speeds_1d(sl, sr, axis, opt.alpha));
  };

  const StateGrid avg(field, 1);
  const double lx = 4.0 * dt / field.mesh().dx();
  const double ly = 4.0 * dt / field.mesh().dy();
  auto limit = [&](Flux& f, const Flux& low, const Conserved& lower, const Conserved& upper,
                   double lambda, int ci, int cj) {
    ++stats.edges;
    if (!opt.pcp) return;
    LimitedFlux lf;
    try {
      lf = pcp_flux_limiter(f, low, lower, upper, lambda, opt.eps_d, opt.eps_q);
    } catch (const PcpFailure& e) {
      throw PcpFailure(ci, cj, e.what());
    }
    f = lf.flux;
    if (lf.theta_d < 1.0) ++stats.limited_edges_d;
    if (lf.theta_q < 1.0) ++stats.limited_edges_q;
    if (lf.theta_d * lf.theta_q < 1.0) ++stats.limited_edges;
  };

  for (int j = 0; j < ny; ++j) {
    for (int i = -1; i < nx; ++i) {
      Flux f;
      const int k0 = two_d ? 1 : 0;
      const int k1 = two_d ? K - 1 : K;
      if (two_d) f = w[0] * (corner(i, j - 1).f + corner(i, j).f);
      for (int k = k0; k < k1; ++k) {
        f += w[k] * node_flux(pv.at(i, j, EdgeSide::Right, k), i, j,
                              pv.at(i + 1, j, EdgeSide::Left, k), i + 1, j, Axis::X);
      }
      const Flux low = low_order_lf_flux(avg(i, j), avg(i + 1, j), Axis::X);
      limit(f, low, field(i, j), field(i + 1, j), lx, i, j);
      out.fx[static_cast<std::size_t>(j) * (nx + 1) + (i + 1)] = f;
    }
  }
  for (int j = -1; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      Flux g;
      const int k0 = two_d ? 1 : 0;
      const int k1 = two_d ? K - 1 : K;
      if (two_d) g = w[0] * (corner(i - 1, j).g + corner(i, j).g);
      for (int k = k0; k < k1; ++k) {
        g += w[k] * node_flux(pv.at(i, j, EdgeSide::Top, k), i, j,
                              pv.at(i, j + 1, EdgeSide::Bottom, k), i, j + 1, Axis::Y);
      }
      const Flux low = low_order_lf_flux(avg(i, j), avg(i, j + 1), Axis::Y);
      limit(g, low, field(i, j), field(i, j + 1), ly, i, j);
      out.gy[static_cast<std::size_t>(j + 1) * nx + i] = g;
    }
  }
  return out;
}

void apply_fluxes(Field& field, const EdgeFluxSet& e, double dt) {
  const int nx = field.nx();
  const int ny = field.ny();
  const double cx = dt / field.mesh().dx();
  const double cy = dt / field.mesh().dy();
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Flux& fr = e.fx[static_cast<std::size_t>(j) * (nx + 1) + (i + 1)];
      const Flux& fl = e.fx[static_cast<std::size_t>(j) * (nx + 1) + i];
      const Flux& gu = e.gy[static_cast<std::size_t>(j + 1) * nx + i];
      const Flux& gd = e.gy[static_cast<std::size_t>(j) * nx + i];
      field(i, j) -= cx * (fr - fl) + cy * (gu - gd);
    }
  }
}

namespace {

void check_stage(const Field& f, int stage) {
  for (int j = 0; j < f.ny(); ++j) {
    for (int i = 0; i < f.nx(); ++i) {
      if (!is_admissible(f(i, j))) {
        throw PcpFailure(i, j, "inadmissible average after RK stage " + std::to_string(stage));
      }
    }
  }
}

// dst = a * dst + b * src over the interior.
void combine(Field& dst, double a, const Field& src, double b) {
  for (int j = 0; j < dst.ny(); ++j) {
    for (int i = 0; i < dst.nx(); ++i) dst(i, j) = a * dst(i, j) + b * src(i, j);
  }
}

}  // namespace

StepStats step_ssp_rk3(Field& field, double dt, const HighOrderOptions& opt, LimiterStats& stats) {
  StepStats st;
  st.dt = dt;
  auto euler = [&](Field& f) {
    fill_ghosts(f);
    if (dt > lf_step_bound(f) * (1.0 + 1e-12)) ++stats.stage_dt_violations;
    const EdgeFluxSet e = compute_edge_fluxes(f, dt, opt, stats);
    st.corners += e.corners;
    st.degenerate_corners += e.degenerate_corners;
    apply_fluxes(f, e, dt);
  };

  const Field u0 = field;
  Field u1 = field;
  euler(u1);
  check_stage(u1, 1);

  Field u2 = u1;
  euler(u2);
  combine(u2, 0.25, u0, 0.75);
  check_stage(u2, 2);

  Field u3 = u2;
  euler(u3);
  combine(u3, 2.0 / 3.0, u0, 1.0 / 3.0);
  check_stage(u3, 3);

  field = std::move(u3);
  fill_ghosts(field);
  st.min_density = field.min_density();
  st.min_q = field.min_q();
  return st;
}

}  // namespace mdhll
