#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mdhll/errors.hpp"
#include "mdhll/high_order.hpp"
#include "random_states.hpp"

using namespace mdhll;
using doctest::Approx;

namespace {

const Eos kEos{5.0 / 3.0};

Field periodic_field(int n, int ghosts = 3) {
  return Field(Mesh(n, n, 0, 1, 0, 1), kEos, BoundarySpec::all(SideCondition::periodic()), ghosts);
}

Primitive sine(double x, double y, double t) {
  const double phase = 2.0 * std::numbers::pi * (x + y - 0.99 * std::numbers::sqrt2 * t);
  const double s = 0.99 / std::numbers::sqrt2;
  return {1.0 + 0.99999 * std::sin(phase), s, s, 0.01};
}

Field random_periodic(testing::StateSampler& sampler, int n) {
  Field f = periodic_field(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) f(i, j) = sampler.conserved(kEos);
  }
  return f;
}

}  // namespace

TEST_CASE("Lax-Friedrichs flux of equal states is the physical flux") {
  const FluidState s = FluidState::from_primitive({0.3, 0.4, -0.5, 2.0}, kEos);
  CHECK(testing::relative_difference(low_order_lf_flux(s, s, Axis::X), s.fx) < 1e-15);
  CHECK(testing::relative_difference(low_order_lf_flux(s, s, Axis::Y), s.fy) < 1e-15);
}

TEST_CASE("flux limiter leaves safe fluxes alone") {
  const FluidState a = FluidState::from_primitive({1.0, 0.1, 0.0, 1.0}, kEos);
  const FluidState b = FluidState::from_primitive({0.8, 0.0, 0.2, 0.7}, kEos);
  const Flux low = low_order_lf_flux(a, b, Axis::X);
  const Flux high = 0.5 * (a.fx + b.fx);
  const LimitedFlux r = pcp_flux_limiter(high, low, a.cons, b.cons, 0.1, 1e-14, 1e-14);
  CHECK(r.theta_d == 1.0);
  CHECK(r.theta_q == 1.0);
  CHECK(testing::relative_difference(r.flux, high) == 0.0);
}

TEST_CASE("flux limiter pulls an unsafe flux onto the floor") {
  const FluidState a = FluidState::from_primitive({1e-3, 0.0, 0.0, 1e-3}, kEos);
  const FluidState b = FluidState::from_primitive({1.0, 0.0, 0.0, 1.0}, kEos);
  const double lambda = 0.2;
  const Flux low = low_order_lf_flux(a, b, Axis::X);
  // Drains more mass from the left cell than it holds.
  Flux high = low;
  high.D = 2.0 * a.cons.D / lambda;
  const LimitedFlux r = pcp_flux_limiter(high, low, a.cons, b.cons, lambda, 1e-14, 1e-14);
  CHECK(r.theta_d < 1.0);
  CHECK(r.theta_d > 0.0);
  const Conserved left = a.cons - lambda * r.flux;
  const Conserved right = b.cons + lambda * r.flux;
  CHECK(is_admissible(left));
  CHECK(is_admissible(right));
  // theta^D puts the left density on the floor (up to the rounding margin).
  const Conserved left_d = a.cons - lambda * ((1.0 - r.theta_d) * low + r.theta_d * high);
  CHECK(left_d.D >= 1e-14);
  CHECK(left_d.D < 2e-14);

  // An inadmissible low-order state means dt was too large.
  CHECK_THROWS_AS(pcp_flux_limiter(high, low, a.cons, b.cons, 1e3, 1e-14, 1e-14), PcpFailure);
}

TEST_CASE("flux limiter keeps positive high-order states below the floor epsilon") {
  // Near vacuum the low-order states sit below epsilon themselves; a
  // high-order state at 70% of them is positive and must pass unlimited.
  const FluidState a = FluidState::from_primitive({2e-15, 0.0, 0.0, 1e-12}, kEos);
  const double lambda = 0.2;
  const Flux low = low_order_lf_flux(a, a, Axis::X);
  Flux high = low;
  high.D = 0.3 * a.cons.D / lambda;
  const LimitedFlux r = pcp_flux_limiter(high, low, a.cons, a.cons, lambda, 1e-14, 1e-14);
  CHECK(r.theta_d == 1.0);
  CHECK(r.theta_q == 1.0);

  // Below half of the low-order value the limiter does engage.
  high.D = 0.8 * a.cons.D / lambda;
  CHECK(pcp_flux_limiter(high, low, a.cons, a.cons, lambda, 1e-14, 1e-14).theta_d < 1.0);
}

TEST_CASE("uniform periodic field is a fixed point of the fifth-order step") {
  for (RiemannMode mode : {RiemannMode::TwoD, RiemannMode::OneD}) {
    Field f = periodic_field(8);
    f.set_interior([](double, double) { return Primitive{0.7, 0.3, -0.2, 0.4}; });
    const std::vector<Conserved> before = f.data();
    HighOrderOptions opt;
    opt.riemann = mode;
    LimiterStats stats;
    for (int s = 0; s < 3; ++s) step_ssp_rk3(f, compute_dt_high(f, 0.45), opt, stats);
    for (int j = 0; j < 8; ++j) {
      for (int i = 0; i < 8; ++i) {
        REQUIRE(testing::relative_difference(f(i, j), before[f.index(i, j)]) < 1e-13);
      }
    }
    CHECK(stats.scaled_cells == 0);
    CHECK(stats.limited_edges == 0);
    CHECK(stats.stage_dt_violations == 0);
  }
}

TEST_CASE("time step of the fifth-order scheme respects the Lax-Friedrichs bound") {
  Field f = periodic_field(16);
  f.set_interior([](double x, double y) { return sine(x, y, 0.0); });
  const double dt = compute_dt_high(f, 0.45);
  fill_ghosts(f);
  CHECK(dt <= lf_step_bound(f));
  CHECK(dt <= compute_dt_first(f, 0.45));
}

TEST_CASE("y-independent data stays y-independent") {
  Field f = periodic_field(16);
  f.set_interior_averages(
      [](double x, double) {
        return Primitive{1.0 + 0.5 * std::sin(2.0 * std::numbers::pi * x), 0.5, 0.2, 1.0};
      },
      4);
  LimiterStats stats;
  for (int s = 0; s < 3; ++s) step_ssp_rk3(f, compute_dt_high(f, 0.45), {}, stats);
  for (int i = 0; i < 16; ++i) {
    for (int j = 1; j < 16; ++j) REQUIRE(testing::relative_difference(f(i, j), f(i, 0)) < 1e-13);
  }
}

TEST_CASE("periodic conservation and positivity on random fields") {
  const testing::DrawRange range{1e-2, 1e2, 1e-2, 1e2, 5.0};
  testing::StateSampler sampler(77, range);
  LimiterStats stats;
  for (int trial = 0; trial < 30; ++trial) {
    Field f = random_periodic(sampler, 8);
    const Conserved before = f.totals();
    for (int s = 0; s < 5; ++s) {
      const StepStats st = step_ssp_rk3(f, compute_dt_high(f, 0.45), {}, stats);
      REQUIRE(st.min_density > 0.0);
      REQUIRE(st.min_q > 0.0);
    }
    const Conserved after = f.totals();
    for (int k = 0; k < 4; ++k) {
      const double scale = std::abs(before[k]) + std::abs(before.E);
      REQUIRE(std::abs(after[k] - before[k]) <= 1e-12 * scale);
    }
  }
  // Random data is rough enough to engage both limiters.
  CHECK(stats.scaled_cells > 0);
  CHECK(stats.limited_edges > 0);
}

TEST_CASE("one-dimensional mode skips the corner solver") {
  Field a(Mesh(8, 8, 0, 1, 0, 1), kEos, BoundarySpec::all(SideCondition::outflow()), 3);
  a.set_interior([](double x, double y) {
    return x >= 0.5 && y >= 0.5 ? Primitive{0.1, 0.0, 0.0, 0.01} : Primitive{0.5, 0.1, 0.1, 1.0};
  });
  Field b = a;
  const double dt = compute_dt_high(a, 0.45);
  LimiterStats stats;
  HighOrderOptions one;
  one.riemann = RiemannMode::OneD;
  const StepStats s2 = step_ssp_rk3(a, dt, {}, stats);
  const StepStats s1 = step_ssp_rk3(b, dt, one, stats);
  CHECK(s2.corners == 3 * 81);
  CHECK(s1.corners == 0);
  CHECK_FALSE(a.data() == b.data());
}

TEST_CASE("fifth-order convergence on the sine wave") {
  const double t_end = 0.1;
  std::vector<double> errors;
  for (int n : {10, 20, 40}) {
    Field f = periodic_field(n);
    f.set_interior_averages([](double x, double y) { return sine(x, y, 0.0); }, 5);
    LimiterStats stats;
    double t = 0.0;
    while (t < t_end) {
      double dt = std::pow(compute_dt_high(f, 0.45), 5.0 / 3.0);
      dt = std::min(dt, t_end - t);
      step_ssp_rk3(f, dt, {}, stats);
      t += dt;
    }
    Field exact = periodic_field(n);
    exact.set_interior_averages([&](double x, double y) { return sine(x, y, t_end); }, 5);
    const ErrorNorms e = error_norms(f.mesh(), [&](int i, int j) {
      return recover_primitive(f(i, j), kEos).rho -
             recover_primitive(exact(i, j), kEos).rho;
    });
    errors.push_back(e.l1);
    if (n >= 20) CHECK(stats.limited_edges == 0);
    MESSAGE("N=" << n << " l1=" << e.l1);
  }
  const double order = std::log2(errors[1] / errors[2]);
  MESSAGE("order " << order);
  CHECK(order > 4.5);
}
