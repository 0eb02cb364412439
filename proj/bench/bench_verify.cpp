// Serial reference versus the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "bier/bier_sphere.hpp"
#include "bier/buchstaber.hpp"
#include "bier/verify.hpp"

namespace {

using bier::verify::TheoremId;

// The reference: one complex at a time through check_complex.
void BM_VerifySerial(benchmark::State& state) {
  const auto id = static_cast<TheoremId>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  bier::verify::VerifyOptions options;
  for (auto _ : state) {
    std::int64_t failures = 0;
    bier::verify::for_each_complex(m, [&](const bier::SimplicialComplex& k) {
      failures += !bier::verify::check_complex(id, k, options).failure.empty();
    });
    benchmark::DoNotOptimize(failures);
  }
  state.SetLabel(bier::verify::to_string(id));
}

void BM_VerifyParallel(benchmark::State& state) {
  const auto id = static_cast<TheoremId>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  bier::verify::VerifyOptions options;
  options.jobs = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(bier::verify::verify_theorem(id, m, options).checked);
  state.SetLabel(bier::verify::to_string(id));
}

void BM_CountComplexes(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(bier::verify::count_complexes(m, jobs));
}

void BM_Oracle(benchmark::State& state) {
  // Eight-vertex 2-sphere: Bier of the cone over three points.
  const auto k = bier::SimplicialComplex::from_facets(4, {{1, 4}, {2, 4}, {3, 4}});
  const auto b = bier::bier(k).complex;
  bier::buchstaber::OracleOptions options;
  options.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bier::buchstaber::s_p_oracle(b, 3, options).value);
}

void theorem_args(benchmark::internal::Benchmark* b) {
  for (int id = 0; id < 6; ++id) b->Args({id, 5});
}

void parallel_args(benchmark::internal::Benchmark* b) {
  for (int id = 0; id < 6; ++id) {
    for (int jobs : {1, 2, 4}) b->Args({id, 5, jobs});
  }
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Apply(theorem_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Apply(parallel_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CountComplexes)->Args({5, 1})->Args({5, 4})->Args({6, 1})->Args({6, 4})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Oracle)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
