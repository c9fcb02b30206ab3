#include <benchmark/benchmark.h>

#include "nbspec/blas_env.hpp"

int main(int argc, char** argv) {
  nbspec::maybe_reexec_with_stable_blas(argc, argv);
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
