#include <benchmark/benchmark.h>

#include "sma/rectangles.hpp"
#include "sma/squares.hpp"
#include "sma/tight.hpp"
#include "sma/verify.hpp"

namespace {

void BM_construct_tight(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto g = sma::tight::construct_tight(m, n);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_construct_tight)
    ->Args({4, 4})
    ->Args({6, 6})
    ->Args({12, 16})
    ->Args({9, 9})
    ->Args({3, 20});

void BM_construct_sms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int t = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto g = sma::squares::construct_sms(n, t);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_construct_sms)
    ->Args({7, 5})
    ->Args({13, 9})
    ->Args({15, 6})
    ->Args({14, 10})
    ->Args({12, 7});

void BM_double_rectangle(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int t = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto g = sma::rects::construct_double_rectangle(m, t);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_double_rectangle)->Args({7, 6})->Args({9, 8});

void BM_verify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = sma::squares::construct_sms(n, n - 2);
  const auto spec = sma::ArraySpec::square(n, n - 2);
  for (auto _ : state) {
    auto rep = sma::verify(g, spec);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_verify)->Arg(9)->Arg(15);

}  // namespace

BENCHMARK_MAIN();
