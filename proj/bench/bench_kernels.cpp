// Serial reference vs OpenMP kernels on the same inputs.
#include <benchmark/benchmark.h>

#include "lsym/cohomology.hpp"

using namespace lsym;

namespace {

GradedAlgebra gl(std::size_t even, std::size_t odd) {
  std::vector<Degree> degs(even, Degree{{0}});
  degs.insert(degs.end(), odd, Degree{{1}});
  return gl_epsilon(super_factor(), degs);
}

Exec mode(const benchmark::State& s) { return s.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_CoboundaryMatrix(benchmark::State& state) {
  CochainComplex c(regular_bimodule(gl(1, 1)));
  c.space(3);  // warm the basis cache outside the timed region
  for (auto _ : state) benchmark::DoNotOptimize(c.coboundary_matrix(2, mode(state)));
}

void BM_LeftSymmetric(benchmark::State& state) {
  GradedAlgebra a = gl(2, 1);  // dimension 9
  for (auto _ : state) benchmark::DoNotOptimize(check_left_symmetric(a, mode(state)));
}

void BM_BimoduleTensor(benchmark::State& state) {
  Bimodule r = regular_bimodule(gl(1, 1));
  Bimodule t = tensor_bimodule(r, r);
  for (auto _ : state) benchmark::DoNotOptimize(check_bimodule(t, mode(state)));
}

void BM_Cohomology(benchmark::State& state) {
  CochainComplex c(regular_bimodule(gl(1, 1)));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_at(c, 2, mode(state)));
}

}  // namespace

// Argument 0 = serial reference, 1 = parallel.
BENCHMARK(BM_CoboundaryMatrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LeftSymmetric)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BimoduleTensor)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Cohomology)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
