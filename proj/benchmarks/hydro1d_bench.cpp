#include <benchmark/benchmark.h>

#include "hydro1d/gridsolver.hpp"
#include "hydro1d/specfun.hpp"
#include "hydro1d/spectrum.hpp"
#include "hydro1d/wkb.hpp"

namespace {

using hydro1d::specfun::UPath;
using hydro1d::specfun::whittaker_w_eval;
using hydro1d::specfun::WhittakerParams;

// Whittaker W by index: half-integer kappa uses the integral path (plus the
// recurrence when kappa > 1), integer kappa the Laguerre reduction.
void BM_WhittakerW(benchmark::State& state) {
  const double kappa = 0.5 * static_cast<double>(state.range(0));
  double z = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(whittaker_w_eval({kappa, 0.5, z}));
    z = z < 20.0 ? z * 1.3 : 0.37;
  }
}
BENCHMARK(BM_WhittakerW)->Arg(1)->Arg(2)->Arg(5)->Arg(20)->Arg(21);

void BM_WhittakerW_TranscendentalAtIntegerKappa(benchmark::State& state) {
  const double kappa = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(whittaker_w_eval({kappa, 0.5, 3.0}, UPath::integral_recurrence));
  }
}
BENCHMARK(BM_WhittakerW_TranscendentalAtIntegerKappa)->Arg(1)->Arg(10);

void BM_WkbEnergy(benchmark::State& state) {
  const hydro1d::QuantumNumber n(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hydro1d::wkb::wkb_energy(n));
}
BENCHMARK(BM_WkbEnergy)->Arg(0)->Arg(20);

void BM_Normalize(benchmark::State& state) {
  const hydro1d::QuantumNumber n(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hydro1d::spectrum::normalize(n));
}
BENCHMARK(BM_Normalize)->Arg(0)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_GridSolveCoulomb(benchmark::State& state) {
  const hydro1d::grid::Grid g{30.0, state.range(0), true};
  const auto v = hydro1d::PotentialSpec::pure_coulomb();
  for (auto _ : state) benchmark::DoNotOptimize(hydro1d::grid::solve(v, g, 6));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GridSolveCoulomb)->RangeMultiplier(4)->Range(1500, 96000)->Unit(benchmark::kMillisecond)->Complexity();

}  // namespace

BENCHMARK_MAIN();
