#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "dqm/cayley.hpp"
#include "dqm/kravchuk_wigner.hpp"
#include "dqm/oscillator.hpp"
#include "dqm/planewave.hpp"
#include "dqm/sampling.hpp"

static void BM_BasisBuild(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dqm::PlaneWaveBasis(n, 1.0));
}
BENCHMARK(BM_BasisBuild)->Arg(16)->Arg(64)->Arg(256);

static void BM_FourierRoundTrip(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const dqm::PlaneWaveBasis basis(n, 1.0);
  const dqm::LatticeState f = dqm::random_state(n, 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(inverse_transform(basis, forward_transform(basis, f)));
}
BENCHMARK(BM_FourierRoundTrip)->Arg(64)->Arg(256);

static void BM_CayleyTrajectory(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const dqm::CayleyPropagator prop(dqm::random_hermitian(state.range(0), rng), 0.1);
  const dqm::ComplexVector psi0 = dqm::random_vector(state.range(0), rng).normalized();
  for (auto _ : state) benchmark::DoNotOptimize(evolve_trajectory(prop, psi0, 100));
}
BENCHMARK(BM_CayleyTrajectory)->Arg(2)->Arg(8)->Arg(32);

static void BM_WignerBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dqm::WignerDMatrix(n, std::numbers::pi / 2.0));
}
BENCHMARK(BM_WignerBuild)->Arg(40)->Arg(256)->Arg(1024);

static void BM_WignerDirectSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int a = -n; a <= n; a += 2) benchmark::DoNotOptimize(dqm::wigner_d_direct(n, a, 0, 1.0));
  }
}
BENCHMARK(BM_WignerDirectSum)->Arg(40);

static void BM_ContinuumConvergence(benchmark::State& state) {
  const std::vector<int> sizes{16, 32, 64, 128, 256};
  for (auto _ : state) benchmark::DoNotOptimize(dqm::continuum_convergence(static_cast<int>(state.range(0)), sizes));
}
BENCHMARK(BM_ContinuumConvergence)->DenseRange(0, 3);

static void BM_PositionSpectrum(benchmark::State& state) {
  const dqm::OscillatorModel model(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dqm::position_spectrum(model));
}
BENCHMARK(BM_PositionSpectrum)->Arg(60)->Arg(200);
BENCHMARK_MAIN();
