#include <doctest.h>

#include <random>

#include "abelian/errors.hpp"
#include "abelian/mad.hpp"
#include "abelian/oracle.hpp"
#include "fixtures.hpp"

using namespace abelian;

namespace {

std::vector<InvolvedPair> pairs(std::initializer_list<std::pair<std::size_t, std::uint32_t>> one_based) {
  std::vector<InvolvedPair> out;
  for (auto [k, b] : one_based) out.push_back({k - 1, b});
  return out;
}

std::vector<Index> with(std::vector<Index> reps, const Index& extra) {
  reps.push_back(extra);
  std::sort(reps.begin(), reps.end());
  return reps;
}

// Random hypermatrix with a random union of orbits as support.
OrbitHypermatrix random_hypermatrix(std::mt19937_64& rng, const Shape& shape, std::uint64_t step) {
  const auto partition = orbit_partition(shape, step);
  std::vector<std::size_t> chosen;
  while (chosen.empty()) {
    for (std::size_t o = 0; o < partition.size(); ++o) {
      if (rng() % 3 == 0) chosen.push_back(o);
    }
  }
  return OrbitHypermatrix::from_support(shape, step, partition.union_of(chosen));
}

}  // namespace

TEST_SUITE("mad") {

TEST_CASE("max-support submatrix realizes a target hypercolumn") {
  const auto m = fixtures::mad_matrix();
  const auto zeroed = max_support_zeroing(m, ZeroConstraint{pairs({{1, 0}})});
  CHECK(zeroed.hypercolumn_is_zero(0, 0));
  CHECK(leq(zeroed, m));
  CHECK_THROWS_AS(max_support_zeroing(m, ZeroConstraint{pairs({{1, 0}, {1, 0}})}), ValidationError);

  const auto column = hypercolumn(m, 0, 1).matrix;
  Bitset target(column.support().size());
  CHECK(max_support_submatrix(m, column.support(), 0, 1) == m);
  auto n = max_support_submatrix(m, target, 0, 1);
  CHECK(n.hypercolumn_is_zero(0, 1));
  Bitset outside(column.support().size(), true);
  if (!column.support().all()) {
    CHECK_THROWS_AS(max_support_submatrix(m, outside, 0, 1), ValidationError);
  }
}

TEST_CASE("matrix sequence on the 3 x 9 example") {
  const auto m = fixtures::mad_matrix();
  const auto result = mad_2d(m);
  CHECK(result.value == 3);
  const auto& trace = result.trace;
  REQUIRE(trace.stages.size() == 2);
  CHECK(trace.stages[0].m == 3);
  CHECK(trace.stages[1].m == 3);
  CHECK(trace.stages[0].explored[0].involved_pairs == pairs({{1, 0}, {2, 0}, {2, 3}, {2, 6}}));
  CHECK(trace.stages[1].explored[0].apparent_distance == 4);
  CHECK(trace.stages[1].explored[0].involved_pairs == pairs({{1, 2}, {2, 2}, {2, 5}, {2, 8}}));
  const auto m1_reps = trace.stages[1].members[0].defining_orbit_reps();
  CHECK(m1_reps == with(with(fixtures::kMadMatrixDefiningReps, {0, 0}), {0, 3}));
  CHECK(trace.stop == MadStop::Exhausted);
  CHECK(eval_count(trace) == 2);
  CHECK(trace.first_minimal == 0);
  CHECK(mad(m).value == 3);
}

TEST_CASE("general recursion on the 3 x 3 x 5 example") {
  const auto m = fixtures::mad_cube();
  const auto result = mad(m);
  CHECK(result.value == 6);
  const auto& trace = result.trace;
  REQUIRE(trace.stages.size() == 1);
  const auto& stage = trace.stages[0];
  REQUIRE(stage.explored.size() == 3);
  CHECK(stage.explored[0].apparent_distance == 6);
  std::vector<std::size_t> succ = stage.explored[0].successors;
  REQUIRE(succ.size() == 2);

  const auto b1 = with(fixtures::kMadCubeDefiningReps, {1, 1, 2});
  const auto b2 = with(fixtures::kMadCubeDefiningReps, {1, 1, 1});
  std::map<std::vector<Index>, const TraceNode*> by_reps;
  for (auto i : succ) by_reps[stage.explored[i].matrix.defining_orbit_reps()] = &stage.explored[i];
  REQUIRE(by_reps.count(b1) == 1);
  REQUIRE(by_reps.count(b2) == 1);
  CHECK(by_reps[b1]->apparent_distance == 12);
  CHECK(by_reps[b2]->apparent_distance == 18);
  CHECK(by_reps[b1]->involved_pairs == pairs({{1, 2}, {2, 2}}));
  CHECK(by_reps[b2]->involved_pairs == pairs({{1, 2}, {2, 2}}));
  CHECK(by_reps[b1]->successors.empty());
  CHECK(by_reps[b2]->successors.empty());
  CHECK(by_reps[b1]->depth == 1);
  CHECK(stage.eta.size() == 2);
  CHECK(stage.m == 6);
  CHECK(mad_bruteforce(m) == 6);
}

TEST_CASE("vectors need no recursion") {
  const auto r = mad(fixtures::ternary_vector());
  CHECK(r.value == 3);
  CHECK(r.trace.stop == MadStop::Vector);
  CHECK_THROWS_AS(mad(OrbitHypermatrix::zero(Shape(2, {7}))), ValidationError);
  CHECK_THROWS_AS(mad_2d(fixtures::cube()), ValidationError);
}

TEST_CASE("mad agrees with exhaustive search on random small instances") {
  std::mt19937_64 rng(2024);
  const std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>> shapes = {
      {2, {3, 5}}, {2, {5, 7}}, {2, {3, 9}}, {3, {4, 5}}, {2, {3, 3, 5}}, {2, {3, 3, 3}}, {3, {2, 4, 5}}};
  for (const auto& [q, r] : shapes) {
    const Shape shape(q, r);
    for (int trial = 0; trial < 12; ++trial) {
      const auto m = random_hypermatrix(rng, shape, 1);
      if (orbit_partition(shape, 1).decompose(m.support()).size() > 12) continue;
      CAPTURE(to_string(Index(r.begin(), r.end())));
      CHECK(mad(m).value == mad_bruteforce(m));
    }
  }
}

TEST_CASE("trace invariants") {
  std::mt19937_64 rng(99);
  const Shape shape(2, {3, 3, 5});
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_hypermatrix(rng, shape, 1);
    const auto r = mad(m);
    const auto& stages = r.trace.stages;
    for (std::size_t i = 1; i < stages.size(); ++i) {
      CHECK(stages[i].m <= stages[i - 1].m);
      for (const auto& member : stages[i].members) {
        bool below = false;
        for (const auto& prev : stages[i - 1].explored) {
          below = below || (leq(member, prev.matrix) && !(member == prev.matrix));
        }
        CHECK(below);
      }
    }
    CHECK(r.value <= apparent_distance(m).value);
  }
}

}  // TEST_SUITE
