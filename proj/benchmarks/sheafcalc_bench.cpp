#include <benchmark/benchmark.h>

#include "sheafcalc/catalog.hpp"
#include "sheafcalc/locale.hpp"
#include "sheafcalc/ltop.hpp"

using namespace sheafcalc;

namespace {

std::shared_ptr<const SieveLattice> chain(std::size_t n) {
  return make_lattice(FinCategory::from_raw(chain_category(n)));
}

const LogicSpec& logic_at(std::int64_t i) { return registry().at(static_cast<std::size_t>(i)); }

}  // namespace

static void BM_MakeLattice(benchmark::State& state) {
  const auto raw = chain_category(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(make_lattice(FinCategory::from_raw(raw)));
}
BENCHMARK(BM_MakeLattice)->DenseRange(3, 6);

static void BM_GenerateDenseTopology(benchmark::State& state) {
  const auto L = chain(static_cast<std::size_t>(state.range(0)));
  const auto& C = L->category();
  std::vector<Sieve> nonempty;
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    for (const auto& S : L->sieves(object_at(c))) {
      if (!S.empty()) nonempty.push_back(S);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(generate_topology(L, nonempty));
}
BENCHMARK(BM_GenerateDenseTopology)->DenseRange(3, 6);

static void BM_EnumerateTopologies(benchmark::State& state) {
  const auto L = make_lattice(FinCategory::from_raw(span_category()));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_topologies(L));
}
BENCHMARK(BM_EnumerateTopologies);

static void BM_ValidatesLogic(benchmark::State& state) {
  const Site site = presheaf_site(chain(5));
  const auto& logic = logic_at(state.range(0));
  state.SetLabel(logic.name);
  for (auto _ : state) benchmark::DoNotOptimize(validates_logic(site, logic));
}
BENCHMARK(BM_ValidatesLogic)->DenseRange(0, 3);

static void BM_LTopology(benchmark::State& state) {
  const Site site = presheaf_site(make_lattice(FinCategory::from_raw(symmetric_group3())));
  const Site cospan = presheaf_site(make_lattice(FinCategory::from_raw(cospan_category())));
  const auto& logic = logic_at(state.range(0));
  state.SetLabel(logic.name);
  for (auto _ : state) {
    benchmark::DoNotOptimize(l_topology(site, logic.axiom));
    benchmark::DoNotOptimize(l_topology(cospan, logic.axiom));
  }
}
BENCHMARK(BM_LTopology)->DenseRange(0, 3);

static void BM_LSublocale(benchmark::State& state) {
  const auto A = product_frame(chain_frame(3), chain_frame(4));
  const auto& logic = logic_at(state.range(0));
  state.SetLabel(logic.name);
  for (auto _ : state) benchmark::DoNotOptimize(l_sublocale(A, logic.axiom));
}
BENCHMARK(BM_LSublocale)->DenseRange(0, 3);

static void BM_EnumerateNuclei(benchmark::State& state) {
  const auto A = chain_frame(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_nuclei(A));
}
BENCHMARK(BM_EnumerateNuclei)->DenseRange(3, 8);
BENCHMARK_MAIN();
