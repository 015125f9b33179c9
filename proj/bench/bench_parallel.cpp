// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "eigsphere/geometry.hpp"
#include "eigsphere/parser.hpp"
#include "eigsphere/search.hpp"

using namespace eigsphere;

namespace {

const VarietyEvaluator& clifford() {
  static const VarietyEvaluator ev(VarietySpec{4, {parse("x1^2 - x2^2 + x3^2 - x4^2", 4)}, true});
  return ev;
}

const VarietyEvaluator& lawson_fiber() {
  static const VarietyEvaluator ev = [] {
    const auto [re, im] = real_imag_parts(parse("z1^3*z2^2 + z2^5", 5));
    return VarietyEvaluator(VarietySpec{5, {re, im}, true});
  }();
  return ev;
}

template <auto Fn>
void BM_Sample(benchmark::State& state) {
  const auto& ev = state.range(1) == 0 ? clifford() : lawson_fiber();
  for (auto _ : state) {
    auto pc = Fn(ev, static_cast<std::size_t>(state.range(0)), 1, NumericOptions{});
    benchmark::DoNotOptimize(pc.points.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_Curvature(benchmark::State& state) {
  const auto& ev = clifford();
  const auto pts = collect_samples(ev, static_cast<std::size_t>(state.range(0)), 3).points;
  for (auto _ : state) {
    auto cs = Fn(ev, pts, NumericOptions{}, nullptr);
    benchmark::DoNotOptimize(cs.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_Search(benchmark::State& state) {
  SearchOptions opts;
  opts.attempts = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto rs = Fn(4, 2, opts);
    benchmark::DoNotOptimize(rs.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Sample<collect_samples>)->Args({1000, 0})->Args({500, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sample<collect_samples_serial>)->Args({1000, 0})->Args({500, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Curvature<curvature_batch>)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Curvature<curvature_batch_serial>)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Search<search_eigen>)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Search<search_eigen_serial>)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
