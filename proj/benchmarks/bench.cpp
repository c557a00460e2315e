#include <benchmark/benchmark.h>

#include "qtcat/catalan.hpp"
#include "qtcat/ideal.hpp"
#include "qtcat/series.hpp"

namespace {

using namespace qtcat;

void BM_GeneratorList(benchmark::State& state) {
  IdealSpec spec(static_cast<int>(state.range(0)),
                 static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto gens = generator_list(spec);
    benchmark::DoNotOptimize(gens);
  }
}
BENCHMARK(BM_GeneratorList)->Args({1, 1})->Args({3, 3})->Args({5, 8});

void BM_OracleSlice(benchmark::State& state) {
  IdealSpec spec(2, 3);
  Bidegree bd{state.range(0), state.range(0)};
  for (auto _ : state) {
    long dim = graded_dim_oracle(spec, bd);
    benchmark::DoNotOptimize(dim);
  }
}
BENCHMARK(BM_OracleSlice)->Arg(4)->Arg(8)->Arg(12);

void BM_HilbertClosedExpand(benchmark::State& state) {
  IdealSpec spec(2, 3);
  RExpr closed = hilbert_closed(spec);
  Window w = Window::box(state.range(0), state.range(0));
  for (auto _ : state) {
    TruncSeries s = expand_series(closed, w);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_HilbertClosedExpand)->Arg(8)->Arg(14);

void BM_CatalanF3(benchmark::State& state) {
  int d1 = static_cast<int>(state.range(0));
  int d2 = static_cast<int>(state.range(1));
  for (auto _ : state) {
    Poly f = catalan_F({d1, d2, d2});
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_CatalanF3)->Args({1, 1})->Args({2, 3})->Args({4, 6});

void BM_CheckGeneration(benchmark::State& state) {
  IdealSpec spec(1, 1);
  for (auto _ : state) {
    auto rep = check_generation(spec, 6);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_CheckGeneration);

}  // namespace

BENCHMARK_MAIN();
