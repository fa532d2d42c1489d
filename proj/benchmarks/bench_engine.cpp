#include <benchmark/benchmark.h>

#include "orbistruct/catalog.hpp"
#include "orbistruct/cycle_notation.hpp"
#include "orbistruct/isomorphism.hpp"
#include "orbistruct/perm_group.hpp"
#include "orbistruct/substructure.hpp"

using namespace orbistruct;

namespace {

PermGroup named(const char* name) {
  return catalog::build_group(*catalog::builtin_catalog().find(name));
}

void BM_closure_a5(benchmark::State& state) {
  auto gens = notation::parse_generator_list("(1 2 3 4 5);(1 2 3)", 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(PermGroup::closure(5, gens));
}
BENCHMARK(BM_closure_a5);

void BM_all_subgroups_a5(benchmark::State& state) {
  PermGroup a5 = named("A5");
  for (auto _ : state)
    benchmark::DoNotOptimize(all_subgroups(a5));
}
BENCHMARK(BM_all_subgroups_a5);

void BM_normalizer_a5_a3(benchmark::State& state) {
  PermGroup a5 = named("A5");
  PermGroup a3 = named("A3").extended(5);
  for (auto _ : state)
    benchmark::DoNotOptimize(normalizer(a5, a3));
}
BENCHMARK(BM_normalizer_a5_a3);

void BM_isomorphism_a5(benchmark::State& state) {
  PermGroup a = named("A5");
  PermGroup b = PermGroup::closure(
      5, notation::parse_generator_list("(1 3 2 4 5);(2 4 3)", 5));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_isomorphic(a, b));
}
BENCHMARK(BM_isomorphism_a5);

void BM_saturation_scan_a5_a4(benchmark::State& state) {
  PermGroup a5 = named("A5");
  PermGroup a4 = named("A4").extended(5);
  for (auto _ : state)
    benchmark::DoNotOptimize(substructure::is_saturated(a5, a4, a4, true));
}
BENCHMARK(BM_saturation_scan_a5_a4);

void BM_analyze_tower(benchmark::State& state) {
  substructure::SubgroupChain chain = substructure::make_chain(
      named("A5"), named("A4").extended(5), named("A3").extended(5));
  for (auto _ : state)
    benchmark::DoNotOptimize(substructure::analyze_chain(chain));
}
BENCHMARK(BM_analyze_tower);

void BM_sweep_s4(benchmark::State& state) {
  PermGroup s4 = named("S4");
  catalog::SweepOptions options;
  options.jobs = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(catalog::sweep(s4, options));
}
BENCHMARK(BM_sweep_s4);

} // namespace

BENCHMARK_MAIN();
