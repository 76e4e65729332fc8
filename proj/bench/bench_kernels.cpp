// Serial reference vs OpenMP kernels. Run with e.g.
//   OMP_NUM_THREADS=4 ./build/bench/ktops_bench

#include <benchmark/benchmark.h>

#include "ktops/coupled_tops.hpp"
#include "ktops/kernels.hpp"
#include "ktops/rmt_ensemble.hpp"
#include "ktops/spectral_stats.hpp"

using namespace ktops;
using kernels::Exec;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

// One Floquet period on the j1 = j2 = 10 system (d = 441).
void BM_ApplyUnitary(benchmark::State& state) {
  const UnitaryMatrix u = build_floquet(TopConfig(Spin(20), Spin(20), 3.0, 0.1, 0.47, 0.47));
  const CVector psi = sample_random_state(21, 21, EnsembleKind::complex, 1).amplitudes();
  CVector out;
  for (auto _ : state) {
    kernels::apply_unitary(u.matrix(), psi, out, exec_of(state));
    benchmark::DoNotOptimize(out.data());
  }
  label(state);
}
BENCHMARK(BM_ApplyUnitary)->Arg(0)->Arg(1);

// Schmidt spectra of all 676 eigenvectors at N = 13, M = 52.
void BM_ColumnSchmidtSpectra(benchmark::State& state) {
  const UnitaryMatrix u = build_floquet(TopConfig(Spin(12), Spin(51), 9.0, 10.0, 0.47, 0.47));
  const FloquetSpectrum spec = diagonalize_floquet(u);
  for (auto _ : state) {
    const RMatrix s = kernels::column_schmidt_spectra(spec.eigenstates, 13, 52, exec_of(state));
    benchmark::DoNotOptimize(s.data());
  }
  label(state);
}
BENCHMARK(BM_ColumnSchmidtSpectra)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// 200 random real states at N = M = 32.
void BM_RandomStateSpectra(benchmark::State& state) {
  for (auto _ : state) {
    const RMatrix s = kernels::random_state_spectra(32, 32, EnsembleKind::real, 200, 7, exec_of(state));
    benchmark::DoNotOptimize(s.data());
  }
  label(state);
}
BENCHMARK(BM_RandomStateSpectra)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SpectraEntropies(benchmark::State& state) {
  const RMatrix spectra = kernels::random_state_spectra(32, 32, EnsembleKind::real, 2000, 7, Exec::parallel);
  for (auto _ : state) {
    const RMatrix e = kernels::spectra_entropies(spectra, exec_of(state));
    benchmark::DoNotOptimize(e.data());
  }
  label(state);
}
BENCHMARK(BM_SpectraEntropies)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
