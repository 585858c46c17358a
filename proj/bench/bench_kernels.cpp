// Serial reference vs OpenMP ensemble kernels. Thread count follows NANOBEAM_THREADS.

#include <benchmark/benchmark.h>

#include "nanobeam/beam_model.hpp"
#include "nanobeam/parallel.hpp"
#include "nanobeam/rates.hpp"
#include "nanobeam/sampling.hpp"

using namespace nanobeam;

namespace {

ModelParams case_three() {
  return ModelParams::from(
      derive_constants(PhysicalBeam::silicon_reference(), strain_case(CaseId::III).epsilon));
}

Execution mode(const benchmark::State& st) {
  return st.range(0) ? Execution::Parallel : Execution::Serial;
}

void BM_GapEnsemble(benchmark::State& st) {
  const ModelParams m = case_three();
  for (auto _ : st) {
    auto rec = gap_ensemble(m, 1e-7, 256, RngSeed{1}, IntegratorConfig{}, mode(st));
    benchmark::DoNotOptimize(rec.data());
  }
  st.SetItemsProcessed(st.iterations() * 256);
}

void BM_FluxMonteCarlo(benchmark::State& st) {
  const ModelParams m = case_three();
  for (auto _ : st) {
    auto e = flux(m, 1e-8, FluxMethod::MonteCarlo, {1 << 20, RngSeed{1}, mode(st)});
    benchmark::DoNotOptimize(e.value);
  }
  st.SetItemsProcessed(st.iterations() * (1 << 20));
}

void BM_DosMonteCarlo(benchmark::State& st) {
  const ModelParams m = case_three();
  for (auto _ : st) {
    auto e = reactant_dos(m, 1e-8, DosMethod::MonteCarlo, {1 << 20, RngSeed{1}, mode(st)});
    benchmark::DoNotOptimize(e.value);
  }
  st.SetItemsProcessed(st.iterations() * (1 << 20));
}

void BM_FluxCorrelation(benchmark::State& st) {
  const ModelParams m = case_three();
  std::vector<double> grid;
  for (int k = 0; k <= 200; ++k) grid.push_back(5.0 * k);
  for (auto _ : st) {
    auto fc = flux_correlation(m, 1e-7, 128, grid, RngSeed{1}, IntegratorConfig{}, 1e-3, mode(st));
    benchmark::DoNotOptimize(fc.K.data());
  }
}

}  // namespace

BENCHMARK(BM_GapEnsemble)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FluxMonteCarlo)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DosMonteCarlo)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FluxCorrelation)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
