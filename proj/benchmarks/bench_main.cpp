#include <benchmark/benchmark.h>

#include "jtype/jtype.hpp"

using namespace jtype;

namespace {

void BM_JordanTypeOfHeisenberg(benchmark::State& state) {
  const NilpotentModel model = heisenberg_model(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jordan_type_of(model));
  state.SetLabel("dim " + std::to_string(model.dim()));
}
BENCHMARK(BM_JordanTypeOfHeisenberg)->Arg(3)->Arg(5)->Arg(7);

void BM_ModRank(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  const ModMatrix m = random_invertible(dim, 101, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mod_rank(m, 101));
}
BENCHMARK(BM_ModRank)->RangeMultiplier(2)->Range(8, 128);

void BM_Restrict(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int i = 1; i <= p; ++i) {
      for (int j = 1; j <= p; ++j) benchmark::DoNotOptimize(restrict(i, j, p));
    }
  }
}
BENCHMARK(BM_Restrict)->Arg(7)->Arg(31)->Arg(101);

void BM_TubeSweep(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const CartanPair cartan = build_cartan_pair(p);
  JordanType seed = JordanType::block(p, p);
  for (int l = 1; l < p; ++l) seed = seed + JordanType::block(p, l, 2);
  std::vector<Int> n(p - 1, 0);
  n[0] = 1;
  const TubeProfile prof = tube_profile(seed, n, cartan, true);
  for (auto _ : state) {
    for (Int ql = 1; ql <= 64; ++ql) benchmark::DoNotOptimize(evaluate_profile(prof, ql));
  }
}
BENCHMARK(BM_TubeSweep)->Arg(5)->Arg(31);

void BM_SolveMultiplicities(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const CartanPair cartan = build_cartan_pair(p);
  std::vector<Int> n(p - 1, 1);
  const TubeProfile prof = tube_profile(JordanType::block(p, 1), n, cartan, true);
  for (auto _ : state) benchmark::DoNotOptimize(solve_multiplicities(prof, cartan));
}
BENCHMARK(BM_SolveMultiplicities)->Arg(5)->Arg(31);

void BM_PiPointSweep(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const NilpotentModel block = NilpotentModel::jordan_block(p, p - 1);
  for (auto _ : state) benchmark::DoNotOptimize(pi_point_sweep(block));
}
BENCHMARK(BM_PiPointSweep)->Arg(7)->Arg(13);

}  // namespace
BENCHMARK_MAIN();
