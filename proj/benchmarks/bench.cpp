// Microbenchmarks for the hot paths: the subset-enumeration kernels,
// the exact solvers they fall back to, and row-list generation.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include <kissing/lsq.hpp>
#include <kissing/matrix.hpp>
#include <kissing/oracle.hpp>
#include <kissing/rowgen.hpp>
#include <kissing/search.hpp>

namespace {

using namespace kissing;

IntMatrix random_square(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

void BM_DetBareiss(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = random_square(n, 0xb1a5 + n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(det_bareiss(m));
  }
}
BENCHMARK(BM_DetBareiss)->DenseRange(3, 8);

void BM_AffineDistanceExact(benchmark::State& state) {
  // A full d x (d-1) candidate system drawn from the real row list, so
  // the entries have realistic size.
  const int d = static_cast<int>(state.range(0));
  const int k = 2;
  const RowList list = generate_rows(d, k, 1, d - 2);
  std::vector<int> subset(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    subset[static_cast<std::size_t>(i)] = 2 * i + 1;
  const PairSystem s = make_system(list, subset);
  for (auto _ : state) {
    benchmark::DoNotOptimize(affine_distance(s));
  }
}
BENCHMARK(BM_AffineDistanceExact)->DenseRange(3, 6);

void enumerate_prefix(benchmark::State& state, Kernel kernel) {
  const int d = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const RowList list = generate_rows(d, k, 1, d - 2);
  SearchConfig cfg;
  cfg.kernel = kernel;
  cfg.max_subsets = std::uint64_t{1} << 16;
  std::uint64_t subsets = 0;
  for (auto _ : state) {
    const RangeMinimum r = enumerate_min(list, cfg);
    subsets += static_cast<std::uint64_t>(r.stats.subsets_evaluated);
    benchmark::DoNotOptimize(r.found);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(subsets));
}

void BM_EnumerateFast(benchmark::State& state) {
  enumerate_prefix(state, Kernel::fast);
}
BENCHMARK(BM_EnumerateFast)
    ->ArgsProduct({{3, 4}, {2, 3}})
    ->Unit(benchmark::kMillisecond);

void BM_EnumerateNaive(benchmark::State& state) {
  enumerate_prefix(state, Kernel::naive);
}
BENCHMARK(BM_EnumerateNaive)
    ->Args({3, 2})
    ->Unit(benchmark::kMillisecond);

void BM_GenerateRows(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_rows(d, k, 0, d - 1).rows.size());
  }
}
BENCHMARK(BM_GenerateRows)
    ->Args({3, 4})
    ->Args({4, 2})
    ->Args({6, 1})
    ->Unit(benchmark::kMicrosecond);

void BM_SimplexOracle(benchmark::State& state) {
  // Exercises the face-enumeration reference on the largest catalog
  // fixture of each dimension.
  const auto fixtures = witness_catalog();
  const auto idx = static_cast<std::size_t>(state.range(0));
  const SimplexPair& pair = fixtures.at(idx).pair;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simplex_distance_squared(pair));
  }
}
BENCHMARK(BM_SimplexOracle)->Arg(0)->Arg(7)->Arg(12)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
