#include <benchmark/benchmark.h>

#include "heffter/classify.hpp"
#include "heffter/construct.hpp"
#include "heffter/embed.hpp"
#include "heffter/io.hpp"
#include "heffter/search.hpp"
#include "heffter/systems.hpp"
#include "heffter/tour.hpp"
#include "heffter/transforms.hpp"
#include "heffter/verify.hpp"

using namespace heffter;

namespace {

void bm_verify_wh5(benchmark::State& state) {
  const auto a = assemble_wh5(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify(a, Mode::relative_weak).ok);
}
BENCHMARK(bm_verify_wh5)->Arg(12)->Arg(40);

void bm_construct_wh5(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(assemble_wh5(static_cast<int>(state.range(0))));
}
BENCHMARK(bm_construct_wh5)->Arg(12)->Arg(24)->Arg(40);

void bm_strictness_wh5(benchmark::State& state) {
  const auto a = assemble_wh5(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(strictness_check(a).strictly_weak);
}
BENCHMARK(bm_strictness_wh5)->Arg(12)->Arg(16);

void bm_systems(benchmark::State& state) {
  const int v = static_cast<int>(state.range(0)), t = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_heffter_systems(v, t, 3).size());
}
BENCHMARK(bm_systems)->Args({21, 3})->Args({30, 6})->Args({37, 1})->Unit(benchmark::kMicrosecond);

void bm_search_count(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), t = static_cast<int>(state.range(1));
  EnumerationOptions o;
  o.threads = static_cast<unsigned>(state.range(2));
  const SearchSpec spec{ArrayContext::heffter(n, n, 3, 3, t), SearchMode::weak, SearchGoal::count, o};
  for (auto _ : state) benchmark::DoNotOptimize(search_arrays(spec).count);
}
BENCHMARK(bm_search_count)
    ->Args({4, 2, 1})
    ->Args({4, 2, 4})
    ->Args({5, 1, 1})
    ->Args({5, 1, 4})
    ->Unit(benchmark::kMillisecond);

void bm_classify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify(static_cast<int>(state.range(0)), 3).rows.size());
}
BENCHMARK(bm_classify)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_solve_tour_wh9(benchmark::State& state) {
  const auto a = *find_weak_with_split_cells(9, {1, 2, 9});
  SolveOptions o;
  o.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_tour(a, SolveStrategy::all, o).size());
}
BENCHMARK(bm_solve_tour_wh9)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_embedding_k55(benchmark::State& state) {
  const auto a = *find_weak_with_split_cells(9, {1, 2, 9});
  const Orientations o{{1, -1, -1}, std::vector<int>(9, -1)};
  for (auto _ : state) benchmark::DoNotOptimize(tour_to_embedding(a, o).chi);
}
BENCHMARK(bm_embedding_k55)->Unit(benchmark::kMillisecond);

void bm_find_wh9(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_weak_with_split_cells(9, {1, 2, 9}).has_value());
}
BENCHMARK(bm_find_wh9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
