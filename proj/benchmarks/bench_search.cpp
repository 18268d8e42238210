#include <benchmark/benchmark.h>

#include "sma/oracle.hpp"
#include "sma/providers.hpp"

namespace {

void BM_magic_rectangle(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto mr = sma::providers::magic_rectangle(m, n);
    benchmark::DoNotOptimize(mr);
  }
}
BENCHMARK(BM_magic_rectangle)->Args({5, 7})->Args({9, 13})->Args({13, 17});

void BM_tight_heffter(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto h = sma::providers::tight_heffter(m, n);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_tight_heffter)->Args({4, 4})->Args({4, 6})->Args({6, 8});

void BM_square_heffter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto h = sma::providers::square_heffter(n, k);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_square_heffter)->Args({5, 3})->Args({8, 5})->Args({9, 7});

void BM_oracle_exhaust(benchmark::State& state) {
  const auto spec = sma::ArraySpec::tight(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto res = sma::oracle::search_one(spec);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_oracle_exhaust)->Arg(5)->Arg(6);

}  // namespace


