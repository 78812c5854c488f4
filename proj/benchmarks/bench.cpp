#include <benchmark/benchmark.h>

#include "tercyc/count.hpp"
#include "tercyc/poly.hpp"

namespace {

void BM_coefficients(benchmark::State& state) {
  const tercyc::Triple t = tercyc::validate_triple(13, 17, 19, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tercyc::coefficients(t));
  }
}
BENCHMARK(BM_coefficients);

void BM_closed_J(benchmark::State& state) {
  const tercyc::Triple t = tercyc::validate_triple(13, 17, 19, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tercyc::closed_J(t));
  }
}
BENCHMARK(BM_closed_J);

void BM_verify_against_table(benchmark::State& state) {
  const tercyc::Triple t = tercyc::validate_triple(7, 11, 13, true);
  const tercyc::CoefficientTable ct = tercyc::coefficients(t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tercyc::verify_against_table(t, ct));
  }
}
BENCHMARK(BM_verify_against_table);

void BM_jump_scan(benchmark::State& state) {
  const tercyc::Triple t = tercyc::validate_triple(17, 23, 29, true);
  const tercyc::CoefficientTable ct = tercyc::coefficients(t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tercyc::jump_scan(ct));
  }
}
BENCHMARK(BM_jump_scan);

}  // namespace

BENCHMARK_MAIN();
