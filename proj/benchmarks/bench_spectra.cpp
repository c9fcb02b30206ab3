#include <benchmark/benchmark.h>

#include <cmath>

#include "nbspec/nbspec.hpp"

using namespace nbspec;

namespace {

SbmParams fig1(int n) {
  const double base = std::pow(std::log(n), 2) / n;
  return {n, 3 * base, base, 1};
}

void BM_SampleSbm(benchmark::State& state) {
  const auto params = fig1(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sample_sbm(params));
}
BENCHMARK(BM_SampleSbm)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SpectrumH(benchmark::State& state) {
  const Graph g = sample_sbm(fig1(static_cast<int>(state.range(0))));
  const auto h = build_H(g).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(eigs_general(h));
}
BENCHMARK(BM_SpectrumH)->Arg(100)->Arg(250)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_SpectrumAdjacency(benchmark::State& state) {
  const Graph g = sample_sbm(fig1(static_cast<int>(state.range(0))));
  const auto a = adjacency_matrix(g);
  for (auto _ : state) benchmark::DoNotOptimize(eigs_symmetric(a));
}
BENCHMARK(BM_SpectrumAdjacency)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SpectrumHExtended(benchmark::State& state) {
  const Graph g = erdos_renyi(static_cast<int>(state.range(0)), 0.4, 3);
  const auto h = build_H(g).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(eigs_general_extended(h));
}
BENCHMARK(BM_SpectrumHExtended)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_IharaBass(benchmark::State& state) {
  const Graph g = erdos_renyi(static_cast<int>(state.range(0)), 0.4, 5);
  for (auto _ : state) benchmark::DoNotOptimize(ihara_bass_check(g));
}
BENCHMARK(BM_IharaBass)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_QepBoundRandom(benchmark::State& state) {
  const auto trial = random_qep_trial(7, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qep_bound(trial.l0, trial.l));
}
BENCHMARK(BM_QepBoundRandom)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_Recovery(benchmark::State& state) {
  const auto params = fig1(static_cast<int>(state.range(0)));
  const Graph g = sample_sbm(params);
  const auto stats = expected_stats(params);
  for (auto _ : state) benchmark::DoNotOptimize(recover_communities(g, stats));
}
BENCHMARK(BM_Recovery)->Arg(250)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace
