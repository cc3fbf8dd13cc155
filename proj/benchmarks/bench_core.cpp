#include <benchmark/benchmark.h>

#include "slab/classify.hpp"
#include "slab/localization.hpp"
#include "slab/survey.hpp"

namespace {

void BM_EnumerateIdeals(benchmark::State& state) {
  const slab::FiniteRing r = slab::make_zn(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(slab::enumerate_ideals(r));
}
BENCHMARK(BM_EnumerateIdeals)->Arg(12)->Arg(24)->Arg(32);

void BM_EnumerateIdealsProduct(benchmark::State& state) {
  const slab::FiniteRing z2 = slab::make_zn(2);
  const slab::FiniteRing r = slab::direct_product(slab::direct_product(z2, z2), slab::direct_product(z2, z2));
  for (auto _ : state) benchmark::DoNotOptimize(slab::enumerate_ideals(r));
}
BENCHMARK(BM_EnumerateIdealsProduct);

void BM_Localize(benchmark::State& state) {
  const slab::FiniteRing r = slab::make_zn(static_cast<std::size_t>(state.range(0)));
  const slab::MultSet s = slab::mult_closure(r, {slab::Element{2}});
  for (auto _ : state) benchmark::DoNotOptimize(slab::localize(r, s));
}
BENCHMARK(BM_Localize)->Arg(12)->Arg(24)->Arg(32);

void BM_SIntegralDomain(benchmark::State& state) {
  const slab::FiniteRing r = slab::make_zn(static_cast<std::size_t>(state.range(0)));
  const auto sets = slab::enumerate_mult_sets(r);
  for (auto _ : state) {
    for (const slab::MultSet& s : sets) benchmark::DoNotOptimize(slab::is_s_integral_domain(r, s));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sets.size()));
}
BENCHMARK(BM_SIntegralDomain)->Arg(12)->Arg(24);

void BM_SmallSurvey(benchmark::State& state) {
  slab::SurveyOptions o;
  o.up_to = 12;
  o.composite_up_to = 8;
  o.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(slab::run_survey(o));
}
BENCHMARK(BM_SmallSurvey)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
