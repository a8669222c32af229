#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mdhll/errors.hpp"
#include "mdhll/riemann.hpp"
#include "random_states.hpp"

using namespace mdhll;
using doctest::Approx;

namespace {

const Eos kEos{5.0 / 3.0};

FluidState make(const Primitive& w) { return FluidState::from_primitive(w, kEos); }

Quadruple uniform(const FluidState& s) { return {s, s, s, s}; }

// F* along x written out from the defining formula, independent of the
// library's helper structure.
Flux reference_corner_flux_x(const Quadruple& q, const WaveFan2D& fan) {
  const double sl = std::min(fan.sL, 0.0);
  const double sr = std::max(fan.sR, 0.0);
  const double sd = std::min(fan.sD, 0.0);
  const double su = std::max(fan.sU, 0.0);
  auto hll = [&](const FluidState& l, const FluidState& r) -> Flux {
    if (sl == 0.0) return l.fx;
    if (sr == 0.0) return r.fx;
    return (sr * l.fx - sl * r.fx + sl * sr * (r.cons - l.cons)) / (sr - sl);
  };
  const Flux fu = hll(q.lu, q.ru);
  const Flux fd = hll(q.ld, q.rd);
  const double w = 2.0 * sl * sr / (sr - sl);
  Flux out;
  for (int k = 0; k < 4; ++k) {
    out[k] = (su * fu[k] - sd * fd[k] -
              w * (q.ru.fy[k] - q.rd.fy[k] - q.lu.fy[k] + q.ld.fy[k])) /
             (su - sd);
  }
  return out;
}

// U* as the convex combination of H_XY = U_XY - F_XY / S_X - G_XY / S_Y.
Conserved reference_state(const Quadruple& q, const WaveFan2D& f) {
  auto h = [](const FluidState& s, double sx, double sy) {
    return s.cons - s.fx / sx - s.fy / sy;
  };
  const double b = (f.sR - f.sL) * (f.sU - f.sD);
  return (f.sL * f.sD * h(q.ld, f.sL, f.sD) - f.sR * f.sD * h(q.rd, f.sR, f.sD) -
          f.sL * f.sU * h(q.lu, f.sL, f.sU) + f.sR * f.sU * h(q.ru, f.sR, f.sU)) /
         b;
}

}  // namespace

TEST_CASE("wave speeds of identical static states") {
  const FluidState s = make({1.0, 0.0, 0.0, 0.1});
  const double cs = std::sqrt(2.0 / 15.0);
  const WaveSpeeds one = wave_speeds_1d(s, s, Axis::X, 1.0);
  CHECK(one.min == Approx(-cs).epsilon(1e-15));
  CHECK(one.max == Approx(cs).epsilon(1e-15));
  const WaveSpeeds two = wave_speeds_1d(s, s, Axis::Y, 2.0);
  CHECK(two.min == Approx(-2.0 * cs).epsilon(1e-15));
  CHECK(two.max == Approx(2.0 * cs).epsilon(1e-15));
  CHECK_THROWS_AS(wave_speeds_1d(s, s, Axis::X, 0.5), ContractError);
}

TEST_CASE("wave speeds of the second Riemann problem's top pair") {
  // Left-up (rho~, u~, 0, 0.05) and right-up (0.1, 0, 0, 20); 40-digit reference.
  const FluidState lu = make({0.00414329639576, 0.9946418833556542, 0.0, 0.05});
  const FluidState ru = make({0.1, 0.0, 0.0, 20.0});
  const WaveSpeeds s = wave_speeds_1d(lu, ru, Axis::X, 1.0);
  CHECK(s.min == Approx(-0.81568130705399400037).epsilon(1e-13));
  CHECK(s.max == Approx(0.99941412367855298218).epsilon(1e-13));
}

TEST_CASE("fan of four identical states and of duplicated columns") {
  const FluidState s = make({0.3, 0.2, -0.4, 2.0});
  const WaveFan2D fan = wave_fan_2d(uniform(s), 2.0);
  CHECK(fan.sL == 2.0 * s.ex.min);
  CHECK(fan.sR == 2.0 * s.ex.max);
  CHECK(fan.sD == 2.0 * s.ey.min);
  CHECK(fan.sU == 2.0 * s.ey.max);

  const FluidState l = make({1.0, 0.5, 0.0, 1.0});
  const FluidState r = make({0.1, -0.3, 0.1, 0.01});
  const WaveFan2D cols = wave_fan_2d({l, l, r, r}, 1.0);
  const WaveSpeeds pair = wave_speeds_1d(l, r, Axis::X, 1.0);
  CHECK(cols.sL == pair.min);
  CHECK(cols.sR == pair.max);
}

TEST_CASE("fan equals brute-force extremes") {
  testing::StateSampler sampler(5);
  for (int n = 0; n < 1000; ++n) {
    const Quadruple q{make(sampler.primitive()), make(sampler.primitive()),
                      make(sampler.primitive()), make(sampler.primitive())};
    const WaveFan2D f = wave_fan_2d(q, 2.0);
    double sl = 1.0, sr = -1.0, sd = 1.0, su = -1.0;
    for (const FluidState* s : {&q.ld, &q.lu, &q.rd, &q.ru}) {
      const Eigenvalues ex = eigenvalues(s->prim, kEos, Axis::X);
      const Eigenvalues ey = eigenvalues(s->prim, kEos, Axis::Y);
      sl = std::min(sl, ex.min);
      sr = std::max(sr, ex.max);
      sd = std::min(sd, ey.min);
      su = std::max(su, ey.max);
    }
    REQUIRE(f.sL == 2.0 * sl);
    REQUIRE(f.sR == 2.0 * sr);
    REQUIRE(f.sD == 2.0 * sd);
    REQUIRE(f.sU == 2.0 * su);
  }
}

TEST_CASE("1D HLL flux consistency and upwinding") {
  const FluidState a = make({1.0, 0.3, 0.1, 1.0});
  const FluidState b = make({0.2, -0.5, 0.0, 0.05});
  CHECK(hll1d_flux(a, a, Axis::X, {-0.5, 0.5}) == a.fx);
  CHECK(hll1d_flux(a, b, Axis::X, {0.1, 0.7}) == a.fx);
  CHECK(hll1d_flux(a, b, Axis::Y, {-0.7, -0.1}) == b.fy);
  CHECK(hll1d_flux(a, b, Axis::X, {0.0, 0.7}) == a.fx);

  const double sl = -0.6, sr = 0.8;
  const Flux f = hll1d_flux(a, b, Axis::X, {sl, sr});
  for (int k = 0; k < 4; ++k) {
    const double expected =
        (sr * a.fx[k] - sl * b.fx[k] + sl * sr * (b.cons[k] - a.cons[k])) / (sr - sl);
    CHECK(f[k] == Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("1D HLL state") {
  const FluidState a = make({1.0, 0.3, 0.1, 1.0});
  const Conserved s = hll1d_state(a, a, Axis::X, {-0.5, 0.5});
  CHECK(testing::relative_difference(s, a.cons) < 1e-15);
  CHECK_THROWS_AS(hll1d_state(a, a, Axis::X, {0.0, 0.5}), ContractError);

  testing::StateSampler sampler(17);
  for (int n = 0; n < 100000; ++n) {
    const FluidState l = make(sampler.primitive());
    const FluidState r = make(sampler.primitive());
    for (Axis axis : {Axis::X, Axis::Y}) {
      const WaveSpeeds sp = wave_speeds_1d(l, r, axis, kPcpAlpha);
      if (!(sp.min < 0.0 && sp.max > 0.0)) continue;
      REQUIRE(is_admissible(hll1d_state(l, r, axis, sp)));
    }
  }
}

TEST_CASE("2D HLL state") {
  const FluidState a = make({0.5, -0.2, 0.6, 0.3});
  const Quadruple q = uniform(a);
  const WaveFan2D fan = wave_fan_2d(q, 2.0);
  CHECK(testing::relative_difference(hll2d_state(q, fan), a.cons) < 1e-14);

  WaveFan2D trivial = fan;
  trivial.sD = 0.0;
  CHECK_THROWS_AS(hll2d_state(q, trivial), ContractError);

  testing::StateSampler sampler(23);
  for (int n = 0; n < 2000; ++n) {
    const Quadruple r{make(sampler.primitive()), make(sampler.primitive()),
                      make(sampler.primitive()), make(sampler.primitive())};
    const WaveFan2D f = wave_fan_2d(r, 2.0);
    if (!f.nontrivial()) continue;
    REQUIRE(testing::relative_difference(hll2d_state(r, f), reference_state(r, f)) < 1e-11);
  }
}

TEST_CASE("2D HLL flux: consistency, column reduction and reference evaluation") {
  const FluidState a = make({0.5, -0.2, 0.6, 0.3});
  const Quadruple q = uniform(a);
  const WaveFan2D fan = wave_fan_2d(q, 2.0);
  CHECK(testing::relative_difference(hll2d_flux(q, fan, Axis::X), a.fx) < 1e-14);
  CHECK(testing::relative_difference(hll2d_flux(q, fan, Axis::Y), a.fy) < 1e-14);

  const FluidState l = make({1.0, 0.1, 0.2, 1.0});
  const FluidState r = make({0.125, -0.1, 0.0, 0.1});
  const Quadruple cols{l, l, r, r};
  const WaveFan2D cf = wave_fan_2d(cols, 1.0);
  REQUIRE(cf.sD < 0.0);
  REQUIRE(cf.sU > 0.0);
  const Flux reduced = hll1d_flux(l, r, Axis::X, {cf.sL, cf.sR});
  CHECK(testing::relative_difference(hll2d_flux(cols, cf, Axis::X), reduced) < 1e-14);

  testing::StateSampler sampler(31);
  for (int n = 0; n < 2000; ++n) {
    const Quadruple r4{make(sampler.primitive()), make(sampler.primitive()),
                       make(sampler.primitive()), make(sampler.primitive())};
    const WaveFan2D f = wave_fan_2d(r4, 1.0);
    REQUIRE(testing::relative_difference(hll2d_flux(r4, f, Axis::X),
                                         reference_corner_flux_x(r4, f)) < 1e-12);
  }
}

TEST_CASE("reflection about the x-axis") {
  testing::StateSampler sampler(41);
  auto mirror = [](const Primitive& w) { return Primitive{w.rho, w.u, -w.v, w.p}; };
  for (int n = 0; n < 1000; ++n) {
    const Primitive ld = sampler.primitive(), lu = sampler.primitive();
    const Primitive rd = sampler.primitive(), ru = sampler.primitive();
    const Quadruple q{make(ld), make(lu), make(rd), make(ru)};
    // Swapping down and up while negating v mirrors the problem.
    const Quadruple m{make(mirror(lu)), make(mirror(ld)), make(mirror(ru)), make(mirror(rd))};
    const Flux f = hll2d_flux(q, wave_fan_2d(q, 2.0), Axis::X);
    const Flux g = hll2d_flux(m, wave_fan_2d(m, 2.0), Axis::X);
    const double scale = std::max({std::abs(f.D), std::abs(f.mx), std::abs(f.my), std::abs(f.E)});
    REQUIRE(std::abs(f.D - g.D) <= 1e-12 * scale);
    REQUIRE(std::abs(f.mx - g.mx) <= 1e-12 * scale);
    REQUIRE(std::abs(f.my + g.my) <= 1e-12 * scale);
    REQUIRE(std::abs(f.E - g.E) <= 1e-12 * scale);
  }
}

TEST_CASE("corner solution bundles fan and both fluxes") {
  const Quadruple q{make({1.0, 0.0, 0.0, 1.0}), make({0.5, 0.1, 0.0, 0.4}),
                    make({0.2, 0.0, 0.3, 0.1}), make({0.1, 0.0, 0.0, 0.01})};
  const CornerSolution c = solve_corner(q, 2.0);
  const WaveFan2D f = wave_fan_2d(q, 2.0);
  CHECK(c.fan.sL == f.sL);
  CHECK(c.f == hll2d_flux(q, f, Axis::X));
  CHECK(c.g == hll2d_flux(q, f, Axis::Y));
}
