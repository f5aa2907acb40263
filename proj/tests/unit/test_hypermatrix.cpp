#include <doctest.h>

#include "abelian/errors.hpp"
#include "abelian/hypermatrix.hpp"
#include "fixtures.hpp"

using namespace abelian;

namespace {

std::vector<InvolvedPair> pairs(std::initializer_list<std::pair<std::size_t, std::uint32_t>> one_based) {
  std::vector<InvolvedPair> out;
  for (auto [k, b] : one_based) out.push_back({k - 1, b});
  return out;
}

}  // namespace

TEST_SUITE("hypermatrix") {

TEST_CASE("ternary vector over Z_4") {
  const auto m = fixtures::ternary_vector();
  CHECK(omega(m, 0, 0) == 2);
  CHECK(omega(m, 0, 3) == 0);
  CHECK_THROWS_AS(omega(m, 0, 1), ValidationError);
  const auto ap = apparent_distance(m);
  CHECK(ap.value == 3);
  CHECK(ap.involved_pairs == pairs({{1, 0}}));
}

TEST_CASE("3 x 5 matrix per-direction values") {
  const auto m = fixtures::small_matrix();
  const auto ap = apparent_distance(m);
  CHECK(ap.value == 6);
  CHECK(ap.per_direction == std::vector<std::uint64_t>{5, 6});
  CHECK(ap.involved_pairs == pairs({{2, 1}}));
  // column-direction table
  CHECK(omega(m, 1, 1) == 2);
  CHECK(apparent_distance(hypercolumn(m, 1, 1).matrix).value == 2);
  CHECK(apparent_distance(hypercolumn(m, 1, 0).matrix).value == 1);
  CHECK(apparent_distance(hypercolumn(m, 0, 0).matrix).value == 5);
}

TEST_CASE("3 x 3 x 5 hypermatrix") {
  const auto m = fixtures::cube();
  const auto ap = apparent_distance(m);
  CHECK(ap.value == 16);
  // d_2 comes from H(2,0) alone (8, omega 0); d_3 from H(3,4) (6, omega 1).
  CHECK(ap.per_direction == std::vector<std::uint64_t>{16, 8, 12});
  CHECK(ap.involved_pairs == pairs({{1, 2}}));
  CHECK(m.hypercolumn_is_zero(0, 0));
  CHECK(apparent_distance(hypercolumn(m, 0, 2).matrix).value == 8);
  CHECK(apparent_distance(hypercolumn(m, 0, 1).matrix).value == 4);
  CHECK(omega(m, 2, 4) == 1);
  // Level 2 of direction 3: rows (0 0 0), (0 1 0), (1 0 1) give 2 * 2 = 4.
  CHECK(apparent_distance(hypercolumn(m, 2, 2).matrix).value == 4);
}

TEST_CASE("hypermatrix with six as apparent distance and seven involved pairs") {
  const auto ap = apparent_distance(fixtures::mad_cube());
  CHECK(ap.value == 6);
  CHECK(ap.involved_pairs == pairs({{1, 2}, {2, 2}, {3, 0}, {3, 1}, {3, 2}, {3, 3}, {3, 4}}));
}

TEST_CASE("hypercolumn steps") {
  const Shape shape(2, {3, 3, 5});
  CHECK(hypercolumn_step(shape, 1, 0, 0) == 1);
  CHECK(hypercolumn_step(shape, 1, 0, 1) == 2);
  CHECK(hypercolumn_step(shape, 1, 2, 1) == 4);
  CHECK(hypercolumn_step(shape, 2, 2, 1) == 4);
  const auto view = hypercolumn(fixtures::cube(), 2, 1);
  CHECK(view.matrix.step() == 4);
  CHECK(view.matrix.shape().lengths() == std::vector<std::uint32_t>{3, 3});
}

TEST_CASE("construction checks closure") {
  const Shape shape(2, {7});
  Bitset d(7);
  d.set(1);
  CHECK_THROWS_AS(OrbitHypermatrix::afford(shape, 1, d), ValidationError);
  CHECK_NOTHROW(OrbitHypermatrix::afford(shape, 3, d));
  CHECK_THROWS_AS(OrbitHypermatrix::afford(Shape(2, {3, 5}), 1, std::vector<Index>{{0, 1}}), ValidationError);
}

TEST_CASE("trivial hypermatrices") {
  const Shape shape(2, {3, 5});
  CHECK(apparent_distance(OrbitHypermatrix::ones(shape)).value == 1);
  CHECK(apparent_distance(OrbitHypermatrix::zero(shape)).value == 0);
  Bitset single(7);
  single.set(0);
  CHECK(apparent_distance(OrbitHypermatrix::from_support(Shape(2, {7}), 1, single)).value == 7);
}

TEST_CASE("order and orbit representatives") {
  const auto m = fixtures::cube();
  const auto all = OrbitHypermatrix::ones(m.shape());
  CHECK(leq(m, all));
  CHECK_FALSE(leq(all, m));
  CHECK(m.defining_orbit_reps().front() == Index{0, 0, 0});
  CHECK_THROWS_AS(leq(m, OrbitHypermatrix::ones(m.shape(), 2)), ValidationError);
}

TEST_CASE("cache memoizes by support") {
  ApparentDistanceCache cache;
  const auto m = fixtures::cube();
  CHECK(cache.value(m) == 16);
  const auto before = cache.size();
  CHECK(cache.value(m) == 16);
  CHECK(cache.size() == before);
}

}  // TEST_SUITE
