#include <benchmark/benchmark.h>

#include "fbplab/coxeter.hpp"
#include "fbplab/families.hpp"
#include "fbplab/identities.hpp"
#include "fbplab/presentation.hpp"
#include "fbplab/rewriting.hpp"

namespace {

  void BM_catalan_closure(benchmark::State& state) {
    auto const m = std::size_t(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(fbplab::family_monoid(fbplab::FamilyKind::C, m).monoid.size());
    }
  }
  BENCHMARK(BM_catalan_closure)->DenseRange(4, 8);

  void BM_bounded_theory(benchmark::State& state) {
    auto const c = fbplab::family_monoid(fbplab::FamilyKind::C, std::size_t(state.range(0))).monoid;
    for (auto _ : state) {
      benchmark::DoNotOptimize(fbplab::bounded_theory_classes(c, fbplab::Universe{2, 6}).size());
    }
  }
  BENCHMARK(BM_bounded_theory)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

  void BM_free_tree_completion(benchmark::State& state) {
    auto const p = fbplab::free_tree_presentation(std::size_t(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(fbplab::complete(p).rules().size());
    }
  }
  BENCHMARK(BM_free_tree_completion)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

  void BM_hecke_unitary(benchmark::State& state) {
    auto const cd = fbplab::coxeter_B(3);
    for (auto _ : state) {
      benchmark::DoNotOptimize(fbplab::hecke0_via_unitary(cd).hecke.monoid.size());
    }
  }
  BENCHMARK(BM_hecke_unitary)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
