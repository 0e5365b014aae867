#include "k3pol/sweeps.hpp"

#include <benchmark/benchmark.h>

using namespace k3pol;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_BeauvilleMukaiSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_beauville_mukai(50, mode(state)));
  label(state);
}

void BM_MonodromySweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_monodromy_invariants(30, mode(state)));
  label(state);
}

void BM_CanonicalizationSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_canonicalization(20, mode(state)));
  label(state);
}

void BM_CertificateSweep(benchmark::State& state) {
  const auto corpus = certificate_corpus(30, 3);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_certificates(corpus, mode(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_BeauvilleMukaiSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonodromySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CanonicalizationSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertificateSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
