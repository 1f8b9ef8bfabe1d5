#include <benchmark/benchmark.h>

#include "ptspec/basis.hpp"
#include "ptspec/eig.hpp"
#include "ptspec/rectwell.hpp"
#include "ptspec/shooting.hpp"

namespace {

ptspec::PotentialSpec gaussian_spec(double v2) {
  ptspec::PotentialSpec s;
  s.model = ptspec::PotentialModel::kGaussian;
  s.v1 = 50.0;
  s.v2 = v2;
  return s;
}

void BM_MismatchGaussian(benchmark::State& state) {
  ptspec::ShootingConfig cfg;
  cfg.L = 12.0;
  cfg.step = 1e-3;
  const ptspec::ShootingWorkspace ws(gaussian_spec(10.0), cfg);
  double e = -40.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ws.mismatch(e).g);
    e = (e < -5.0) ? e + 1.0 : -40.0;
  }
}
BENCHMARK(BM_MismatchGaussian)->Unit(benchmark::kMillisecond);

void BM_RectEliminant(benchmark::State& state) {
  double e = -19.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptspec::rect_eliminant(e, 20.0, 3.0, 2.0));
    e = (e < -1.0) ? e + 0.5 : -19.0;
  }
}
BENCHMARK(BM_RectEliminant);

void BM_GaussianHamiltonianAssembly(benchmark::State& state) {
  ptspec::BasisConfig cfg;
  cfg.n_basis = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ptspec::build_gaussian_hamiltonian(50.0, 10.0, cfg));
  }
}
BENCHMARK(BM_GaussianHamiltonianAssembly)->Arg(80)->Arg(160);

void BM_EigComplex(benchmark::State& state) {
  ptspec::BasisConfig cfg;
  cfg.n_basis = static_cast<int>(state.range(0));
  const ptspec::ComplexMatrix h =
      ptspec::build_gaussian_hamiltonian(50.0, 10.0, cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptspec::eig_complex(h).values);
  }
}
BENCHMARK(BM_EigComplex)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);

void BM_WcPencilSolve(benchmark::State& state) {
  ptspec::BasisConfig cfg;
  cfg.n_basis = 140;
  const auto [a, b] = ptspec::build_wc_pencil(20.0, 5.0, cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptspec::eig_pencil(a, b).values);
  }
}
BENCHMARK(BM_WcPencilSolve)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
