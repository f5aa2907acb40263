#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "abelian/codes.hpp"
#include "abelian/mad.hpp"
#include "abelian/oracle.hpp"

using namespace abelian;

namespace {

// Fixed-seed matrix whose support is exactly `orbits` q-orbits.
OrbitHypermatrix matrix_with_orbits(const Shape& shape, std::size_t orbits) {
  const auto partition = orbit_partition(shape);
  std::vector<std::size_t> all(partition.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::mt19937_64 rng(7);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(orbits, all.size()));
  return OrbitHypermatrix::from_support(shape, 1, partition.union_of(all));
}

// The matrix sequence against exhaustive search: linear vs exponential in the
// number of support orbits.
void BM_Mad2d(benchmark::State& state) {
  const auto m = matrix_with_orbits(Shape(2, {15, 17}), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mad_2d(m).value);
}
BENCHMARK(BM_Mad2d)->DenseRange(4, 16, 4);

void BM_MadBruteforce(benchmark::State& state) {
  const auto m = matrix_with_orbits(Shape(2, {15, 17}), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mad_bruteforce(m));
}
BENCHMARK(BM_MadBruteforce)->DenseRange(4, 16, 4);

void BM_MadCube(benchmark::State& state) {
  const auto m = OrbitHypermatrix::from_orbit_reps(
      Shape(2, {3, 3, 5}), 1,
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 0}, {1, 2, 1},
       {1, 2, 2}, {1, 0, 1}, {0, 1, 1}, {1, 0, 2}, {0, 1, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(mad(m).value);
}
BENCHMARK(BM_MadCube);

void BM_CodeApparentDistance(benchmark::State& state) {
  const auto code = code_from_orbits(Shape(2, {5, 7}), {{0, 0}, {1, 0}, {0, 1}, {0, 3}, {1, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(apparent_distance_code(code).value);
}
BENCHMARK(BM_CodeApparentDistance);

void BM_MinDistance(benchmark::State& state) {
  const auto g = generator_matrix(code_from_orbits(Shape(2, {5, 7}), {{0, 1}, {0, 3}, {1, 3}}));
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_bruteforce(g));
}
BENCHMARK(BM_MinDistance);

}  // namespace

BENCHMARK_MAIN();
