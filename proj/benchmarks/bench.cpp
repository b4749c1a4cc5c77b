#include <benchmark/benchmark.h>

#include <secseq/monomial.hpp>
#include <secseq/pointset.hpp>
#include <secseq/poset.hpp>
#include <secseq/segre.hpp>
#include <secseq/veronese.hpp>

namespace {

using namespace secseq;

void BM_BoxQuotientDim(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const BoxIdeal ideal(n, d, veronese_addition_segment(n, d));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ideal.quotient_dim());
  }
}
BENCHMARK(BM_BoxQuotientDim)->Args({3, 4})->Args({4, 3})->Args({5, 3});

void BM_RlgVeronese(benchmark::State& state) {
  const VeroneseInstance inst{static_cast<int>(state.range(0)),
                              static_cast<int>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rlg_veronese(inst));
  }
}
BENCHMARK(BM_RlgVeronese)->Args({2, 7})->Args({3, 4})->Args({4, 3})->Args({5, 3});

void BM_RlgSegre(benchmark::State& state) {
  const SegreInstance inst{static_cast<int>(state.range(0)),
                           static_cast<int>(state.range(1))};
  const int threads = static_cast<int>(state.range(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rlg_segre(inst, SearchBudget{}, threads));
  }
}
BENCHMARK(BM_RlgSegre)
    ->Args({3, 3, 1})
    ->Args({4, 4, 1})
    ->Args({5, 3, 1})
    ->Args({4, 4, 2})
    ->Args({4, 4, 4});

void BM_PosetGreedy(benchmark::State& state) {
  const PosetInstance poset = counterexample_poset();
  for (auto _ : state) {
    benchmark::DoNotOptimize(poset.solve_greedy());
  }
}
BENCHMARK(BM_PosetGreedy);

void BM_PosetExact(benchmark::State& state) {
  const PosetInstance poset = veronese_monomial_game(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(poset.solve_exact());
  }
}
BENCHMARK(BM_PosetExact)->Arg(2)->Arg(3);

void BM_PointsetRank(benchmark::State& state) {
  const PointConfig cfg = q2_example_config();
  std::vector<int> all(cfg.points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(subset_rank(cfg, all));
  }
}
BENCHMARK(BM_PointsetRank);

void BM_PointsetFlats(benchmark::State& state) {
  const PointConfig cfg =
      state.range(0) == 0 ? q2_example_config() : grid_3x3_config();
  for (auto _ : state) {
    benchmark::DoNotOptimize(flats(cfg));
  }
}
BENCHMARK(BM_PointsetFlats)->Arg(0)->Arg(1);

void BM_PointsetSecant(benchmark::State& state) {
  const PointConfig cfg = q2_example_config();
  for (auto _ : state) {
    benchmark::DoNotOptimize(secant_sequence(cfg));
  }
}
BENCHMARK(BM_PointsetSecant);

}  // namespace

BENCHMARK_MAIN();
