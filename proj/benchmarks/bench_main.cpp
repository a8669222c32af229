#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mdhll/first_order.hpp"
#include "mdhll/high_order.hpp"
#include "mdhll/problems.hpp"

using namespace mdhll;

namespace {

std::vector<Conserved> random_states(std::size_t n, const Eos& eos) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lg(-4.0, 2.0);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> speed(0.0, 0.999);
  std::vector<Conserved> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double s = speed(rng);
    const double a = ang(rng);
    out.push_back(conserved_from_primitive(
        {std::pow(10.0, lg(rng)), s * std::cos(a), s * std::sin(a), std::pow(10.0, lg(rng))}, eos));
  }
  return out;
}

}  // namespace

static void BM_RecoverPrimitive(benchmark::State& state) {
  const Eos eos(5.0 / 3.0);
  const auto us = random_states(1024, eos);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(recover_primitive(us[k++ & 1023], eos));
  }
}
BENCHMARK(BM_RecoverPrimitive);

static void BM_Hll1dFlux(benchmark::State& state) {
  const Eos eos(5.0 / 3.0);
  const auto us = random_states(1024, eos);
  std::vector<FluidState> fs;
  for (const Conserved& u : us) fs.push_back(FluidState::from_conserved(u, eos));
  std::size_t k = 0;
  for (auto _ : state) {
    const FluidState& l = fs[k & 1023];
    const FluidState& r = fs[(k + 1) & 1023];
    benchmark::DoNotOptimize(hll1d_flux(l, r, Axis::X, wave_speeds_1d(l, r, Axis::X, kPcpAlpha)));
    ++k;
  }
}
BENCHMARK(BM_Hll1dFlux);

static void BM_SolveCorner(benchmark::State& state) {
  const Eos eos(5.0 / 3.0);
  const auto us = random_states(1024, eos);
  std::vector<FluidState> fs;
  for (const Conserved& u : us) fs.push_back(FluidState::from_conserved(u, eos));
  std::size_t k = 0;
  for (auto _ : state) {
    const Quadruple q{fs[k & 1023], fs[(k + 1) & 1023], fs[(k + 2) & 1023], fs[(k + 3) & 1023]};
    benchmark::DoNotOptimize(solve_corner(q, kPcpAlpha));
    ++k;
  }
}
BENCHMARK(BM_SolveCorner);

static void BM_FirstOrderStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ProblemSpec p = make_problem("rp1");
  Field f = initial_field(p, n, n, 1);
  const double dt = compute_dt_first(f, 0.25);
  for (auto _ : state) {
    Field g = f;
    benchmark::DoNotOptimize(step_first_order(g, dt));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_FirstOrderStep)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_HighOrderStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ProblemSpec p = make_problem("vortex");
  Field f = initial_field(p, n, n, 5);
  const double dt = compute_dt_high(f, 0.45);
  for (auto _ : state) {
    Field g = f;
    LimiterStats stats;
    benchmark::DoNotOptimize(step_ssp_rk3(g, dt, HighOrderOptions{}, stats));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_HighOrderStep)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
