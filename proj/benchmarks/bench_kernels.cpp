#include <benchmark/benchmark.h>

#include <random>

#include "tricode/quadcode.hpp"
#include "tricode/trits.hpp"

using namespace tricode;

namespace {

TritVec random_vec(std::mt19937& rng, std::uint32_t n) {
  std::uniform_int_distribution<int> d(0, 2);
  TritVec v(n);
  for (std::uint32_t i = 0; i < n; ++i) v.set(i, static_cast<std::uint8_t>(d(rng)));
  return v;
}

void BM_VecAdd(benchmark::State& state) {
  std::mt19937 rng(1);
  const std::uint32_t n = static_cast<std::uint32_t>(state.range(0));
  TritVec a = random_vec(rng, n);
  const TritVec b = random_vec(rng, n);
  for (auto _ : state) {
    a.add_assign(b);
    benchmark::DoNotOptimize(a.lo());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_VecAdd)->Arg(243)->Arg(2187);

void BM_Weight(benchmark::State& state) {
  std::mt19937 rng(2);
  const TritVec v = random_vec(rng, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(v.weight());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Weight)->Arg(243)->Arg(2187);

void BM_SpanInsertStream(benchmark::State& state) {
  std::mt19937 rng(3);
  std::vector<TritVec> rows;
  for (int i = 0; i < 200; ++i) rows.push_back(random_vec(rng, 729));
  for (auto _ : state) {
    SpanBasis basis(729);
    for (const auto& r : rows) basis.insert(r);
    benchmark::DoNotOptimize(basis.rank());
  }
  state.SetItemsProcessed(state.iterations() * rows.size());
}
BENCHMARK(BM_SpanInsertStream);

void BM_FieldTables(benchmark::State& state) {
  for (auto _ : state) {
    Field f(static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(f.trace(1));
  }
}
BENCHMARK(BM_FieldTables)->Arg(5)->Arg(6);

void BM_WeightDistribution(benchmark::State& state) {
  const Field f(3);
  const LinearCode c = quadratic_code(f);
  for (auto _ : state) benchmark::DoNotOptimize(c.weight_distribution());
}
BENCHMARK(BM_WeightDistribution);

void BM_SupportRank(benchmark::State& state) {
  const Field f(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_weight_support_rank(f).rank);
  }
}
BENCHMARK(BM_SupportRank)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
