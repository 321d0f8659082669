#include <benchmark/benchmark.h>

#include "freiman/census.hpp"
#include "freiman/families.hpp"
#include "freiman/invariants.hpp"

using namespace freiman;

namespace {

void BM_IdealSquare(benchmark::State& state) {
  MonomialIdeal ideal = maximal_ideal_power(3, state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(ideal_power(ideal, 2).mu());
}
BENCHMARK(BM_IdealSquare)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_AnalyticSpread(benchmark::State& state) {
  MonomialIdeal ideal = veronese_type(
      VeroneseSpec::squarefree(static_cast<int>(state.range(0)), 3));
  for (auto _ : state)
    benchmark::DoNotOptimize(analytic_spread(ideal));
}
BENCHMARK(BM_AnalyticSpread)->Arg(5)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_BorelClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Monomial seed = Monomial::variable(n, n - 2) * Monomial::variable(n, n - 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(principal_borel(seed).mu());
}
BENCHMARK(BM_BorelClosure)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_HibiDelta(benchmark::State& state) {
  Poset diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  for (auto _ : state)
    benchmark::DoNotOptimize(delta(hibi_ideal(diamond)).delta);
}
BENCHMARK(BM_HibiDelta)->Unit(benchmark::kMicrosecond);

void BM_CensusHeight32(benchmark::State& state) {
  CensusOptions opts;
  opts.filter.height_max = true;
  opts.jobs = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(freiman_census(3, 2, opts).freiman_count);
}
BENCHMARK(BM_CensusHeight32)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_LabeledPosets(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_labeled_posets(size).size());
}
BENCHMARK(BM_LabeledPosets)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
