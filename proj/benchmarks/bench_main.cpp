#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "cmred/catalog.hpp"
#include "cmred/group.hpp"
#include "cmred/pipeline.hpp"
#include "cmred/words.hpp"

namespace {

using namespace cmred;

std::string random_word(std::size_t length, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::string out(length, 'F');
  for (char& c : out)
    if (rng() & 1) c = 'V';
  return out;
}

void BM_canonicalize_booth(benchmark::State& state) {
  const std::string word = random_word(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(least_rotation_index(word));
}
BENCHMARK(BM_canonicalize_booth)->Arg(64)->Arg(1024)->Arg(16384);

void BM_canonicalize_naive(benchmark::State& state) {
  const std::string word = random_word(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    std::string best = word;
    for (std::size_t k = 1; k < word.size(); ++k) {
      std::string rotated = word.substr(k) + word.substr(0, k);
      if (rotated < best) best = rotated;
    }
    benchmark::DoNotOptimize(best);
  }
}
BENCHMARK(BM_canonicalize_naive)->Arg(64)->Arg(1024);

void BM_aperiodic_enumeration(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(aperiodic_classes(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_aperiodic_enumeration)->Arg(12)->Arg(16)->Arg(20);

void BM_group_closure(benchmark::State& state) {
  const auto gens = parse_cycles("deg=10;(2,7)(3,4,8,9);(1,4,3,8)");
  for (auto _ : state)
    benchmark::DoNotOptimize(FiniteGroup::generate(10, gens));
}
BENCHMARK(BM_group_closure);

void BM_subgroup_search(benchmark::State& state) {
  const FiniteGroup w = build_group("wreath-c2:symmetric:3").group;
  const Permutation iota = central_involutions(w).at(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(subgroups_of_order(w, 8, iota));
}
BENCHMARK(BM_subgroup_search);

void BM_subgroup_search_384(benchmark::State& state) {
  const FiniteGroup w = build_group("wreath-c2:symmetric:4").group;
  const Permutation iota = central_involutions(w).at(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(subgroups_of_order(w, 48, iota, 500));
}
BENCHMARK(BM_subgroup_search_384)->Unit(benchmark::kMillisecond);

void BM_worked_example(benchmark::State& state) {
  const LabeledGroup group = build_group("builtin:G40_12");
  RunOptions options;
  options.g = 5;
  for (auto _ : state)
    benchmark::DoNotOptimize(compute_correspondences(group, options));
}
BENCHMARK(BM_worked_example)->Unit(benchmark::kMillisecond);

void BM_dimension4_stretch(benchmark::State& state) {
  const LabeledGroup group = build_group("wreath-c2:symmetric:4");
  RunOptions options;
  options.g = 4;
  options.subgroup_cap = 500;
  for (auto _ : state)
    benchmark::DoNotOptimize(compute_correspondences(group, options));
}
BENCHMARK(BM_dimension4_stretch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
