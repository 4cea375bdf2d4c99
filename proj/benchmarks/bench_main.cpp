#include <benchmark/benchmark.h>

#include <random>

#include "qdefect/constructions.hpp"
#include "qdefect/qmatroid.hpp"

using namespace qdefect;

namespace {

void BM_FieldMul(benchmark::State& state) {
  const auto t = FieldTower::make(2, 1, static_cast<int>(state.range(0)));
  const Field& F = t->top();
  const Elem mask = F.order() - 1;
  Elem acc = 1;
  Elem x = 3;
  for (auto _ : state) {
    acc = F.mul(acc, x) ^ 1;
    x = (x * 5 + 1) & mask;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(12);

void BM_FieldMulTower(benchmark::State& state) {
  const auto t = FieldTower::make(3, 2, 3);  // F_729 over F_9
  const Field& F = t->top();
  Elem acc = 1;
  Elem x = 2;
  for (auto _ : state) {
    acc = F.add(F.mul(acc, x), 1);
    x = (x * 7 + 1) % F.order();
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMulTower);

void BM_Rref(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto t = FieldTower::make(2, 1, 8);
  std::mt19937_64 rng(1);
  Mat m(t, Level::qm, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<Elem>(rng() & 255);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(32)->Arg(64);

void BM_RrefBinary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto t = FieldTower::make(2, 1, 1);
  std::mt19937_64 rng(2);
  Mat m(t, Level::q, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<Elem>(rng() & 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefBinary)->Arg(32)->Arg(128);

void BM_DefectProfile(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const auto t = FieldTower::make(2, 1, m);
  std::mt19937_64 rng(3);
  const RankCode c = RankCode::from_generator(random_systematic(t, k, m, rng));
  for (auto _ : state) benchmark::DoNotOptimize(defect_profile(c.system()));
}
BENCHMARK(BM_DefectProfile)->Args({2, 4})->Args({3, 4})->Args({3, 5})->Unit(benchmark::kMillisecond);

void BM_WeightDistribution(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto t = FieldTower::make(2, 1, m);
  const RankCode c = RankCode::from_generator(gabidulin_generator(t, 2, m));
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(c));
}
BENCHMARK(BM_WeightDistribution)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_GeneralizedWeights(benchmark::State& state) {
  const auto t = FieldTower::make(2, 1, 4);
  std::mt19937_64 rng(4);
  const Mat g = random_systematic(t, 3, 6, rng);
  const auto method = static_cast<GenWeightMethod>(state.range(0));
  for (auto _ : state) {
    // Fresh code each round: the defect method would otherwise reuse the cached profile.
    benchmark::DoNotOptimize(generalized_weights(RankCode::from_generator(g), method));
  }
}
BENCHMARK(BM_GeneralizedWeights)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_NkMrdTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(min_feasible_m(5, 5, 2, 3));
}
BENCHMARK(BM_NkMrdTable)->Unit(benchmark::kMillisecond);

void BM_NkMrdSymbolic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nkmrd_wdist(5, 5, 2, 3));
}
BENCHMARK(BM_NkMrdSymbolic)->Unit(benchmark::kMillisecond);

void BM_QMatroidAxioms(benchmark::State& state) {
  const auto t = FieldTower::make(2, 1, 5);
  const Mat g = gabidulin_generator(t, 2, 5);
  for (auto _ : state) {
    // Fresh matroid each round so the rank memo does not carry over.
    benchmark::DoNotOptimize(check_axioms(QMatroid::from_matrix(g)));
  }
}
BENCHMARK(BM_QMatroidAxioms)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
