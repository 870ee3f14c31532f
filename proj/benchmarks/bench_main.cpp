#include <benchmark/benchmark.h>

#include "coulomb/abphase.hpp"
#include "coulomb/convolution.hpp"
#include "coulomb/helmholtz.hpp"
#include "coulomb/potentials.hpp"
#include "coulomb/presets.hpp"
#include "coulomb/solenoid.hpp"

using namespace coulomb;

namespace {

ScalarField gaussian(std::size_t n) {
  const auto g = Grid3::cube(n, 3.0);
  return ScalarField::sample(g, [](const Vec3& p) { return std::exp(-dot(p, p)); });
}

VectorField3 ring(std::size_t n) {
  presets::FluxRing r{1.0, 1.0};
  return VectorField3::sample(Grid3::cube(n, 3.0), [&](const Vec3& p) { return r.B(p); });
}

void BM_NewtonianConvolve(benchmark::State& state) {
  const auto f = gaussian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(newtonian_convolve(f));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(f.grid().size()));
}
BENCHMARK(BM_NewtonianConvolve)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNSquared);

void BM_VectorPotentialFromB(benchmark::State& state) {
  const auto B = ring(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vector_potential_from_B(B));
}
BENCHMARK(BM_VectorPotentialFromB)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const auto F = ring(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(F));
}
BENCHMARK(BM_Decompose)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ALoopFull(benchmark::State& state) {
  const SquareFluxLoop loop(static_cast<double>(state.range(0)), 1.0);
  const Vec3 p{0.3, 1.1, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(a_loop_full(p, loop));
}
BENCHMARK(BM_ALoopFull)->Arg(10)->Arg(1000);

void BM_FringeScan(benchmark::State& state) {
  std::vector<double> fluxes(97), positions(64);
  for (std::size_t i = 0; i < fluxes.size(); ++i) fluxes[i] = 0.2 * static_cast<double>(i);
  for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = -1.0 + 2.0 * static_cast<double>(i) / 64.0;
  for (auto _ : state) benchmark::DoNotOptimize(make_fringe_scan({}, fluxes, positions, 1.0, 1.0));
}
BENCHMARK(BM_FringeScan);

}  // namespace
BENCHMARK_MAIN();
