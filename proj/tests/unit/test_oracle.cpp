#include <doctest.h>

#include <random>

#include "abelian/codes.hpp"
#include "abelian/errors.hpp"
#include "abelian/oracle.hpp"
#include "fixtures.hpp"

using namespace abelian;

namespace {

AmbientPolynomial random_polynomial(std::mt19937_64& rng, const Shape& shape, const Field& field, int terms) {
  AmbientPolynomial f(shape, field);
  for (int t = 0; t < terms; ++t) {
    Index i(shape.dims());
    for (std::size_t k = 0; k < shape.dims(); ++k) i[k] = static_cast<std::uint32_t>(rng() % shape.length(k));
    f.add_term(i, FieldElement{1 + rng() % (field.order() - 1)});
  }
  return f;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("polynomial apparent distance of x2^3 - (x1 + 1) x2 over F_3") {
  const Shape shape(3, {2, 4});
  const Field f3(3, 1U);
  AmbientPolynomial f(shape, f3);
  f.add_term({0, 3}, f3.one());
  f.add_term({1, 1}, f3.from_int(-1));
  f.add_term({0, 1}, f3.from_int(-1));
  CHECK(apparent_distance_poly(f) == 4);

  // leading coefficients at h = (1,2): c_1 = x2 - x2^3 and c_2 = -1 - x1
  AmbientPolynomial c1(Shape(3, {4}), f3);
  c1.add_term({1}, f3.one());
  c1.add_term({3}, f3.from_int(-1));
  CHECK(apparent_distance_poly(c1) == 2);
  AmbientPolynomial c2(Shape(3, {2}), f3);
  c2.add_term({0}, f3.from_int(-1));
  c2.add_term({1}, f3.from_int(-1));
  CHECK(apparent_distance_poly(c2) == 1);
}

TEST_CASE("polynomial and hypermatrix apparent distances agree") {
  std::mt19937_64 rng(31);
  const std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>> shapes = {
      {2, {7}}, {3, {8}}, {2, {3, 5}}, {3, {2, 4}}, {2, {3, 3, 5}}, {3, {2, 2, 5}}};
  for (const auto& [q, r] : shapes) {
    const Shape shape(q, r);
    const Field field(q, 1U);
    for (int trial = 0; trial < 15; ++trial) {
      const auto f = random_polynomial(rng, shape, field, 1 + static_cast<int>(rng() % 6));
      CHECK(apparent_distance_poly(f) == apparent_distance(support_hypermatrix(f)).value);
    }
  }
  AmbientPolynomial zero(Shape(2, {5}), Field(2, 1U));
  CHECK(apparent_distance_poly(zero) == 0);
}

TEST_CASE("Fourier transform") {
  const Shape shape(2, {3});
  const auto sf = splitting_field(shape);
  AmbientPolynomial one(shape, Field(2, 1U));
  one.add_term({0}, FieldElement{1});
  const auto t1 = fourier_transform(one, sf);
  for (std::size_t j = 0; j < 3; ++j) CHECK(t1.coefficient(j) == sf.field.one());

  AmbientPolynomial x(shape, Field(2, 1U));
  x.add_term({1}, FieldElement{1});
  const auto tx = fourier_transform(x, sf);
  CHECK(tx.coefficient(0) == sf.field.one());
  CHECK(tx.coefficient(1) == sf.roots[0]);
  CHECK(tx.coefficient(2) == sf.field.mul(sf.roots[0], sf.roots[0]));

  std::mt19937_64 rng(41);
  for (const auto& [q, r] : std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>>{{2, {3, 5}}, {3, {2, 4}}, {2, {7}}}) {
    const Shape s(q, r);
    const auto field = splitting_field(s);
    const Field base(q, 1U);
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = random_polynomial(rng, s, base, 4);
      const auto g = random_polynomial(rng, s, base, 3);
      const auto tf = fourier_transform(f, field);
      CHECK(restrict_to_prime_field(inverse_fourier_transform(tf, field)) == f);
      CHECK(fourier_transform(multiply(f, g), field) == pointwise(tf, fourier_transform(g, field)));
    }
  }
}

TEST_CASE("generating idempotents") {
  const auto e3 = generating_idempotent(code_from_orbits(Shape(2, {3}), {{1}}));
  CHECK(e3.coefficients.size() == 3);  // 1 + x + x^2
  CHECK(multiply(e3, e3) == e3);

  const auto full = generating_idempotent(code_from_orbits(Shape(2, {5, 7}), {}));
  REQUIRE(full.coefficients.size() == 1);
  CHECK(full.coefficients.begin()->first == 0);

  const auto zero = generating_idempotent(code_from_orbits(Shape(2, {3}), {{0}, {1}}));
  CHECK(zero.is_zero());

  std::mt19937_64 rng(43);
  for (const auto& [q, r] : std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>>{{2, {5, 7}}, {3, {2, 4}}, {2, {3, 3, 5}}, {5, {4, 3}}}) {
    const Shape shape(q, r);
    const auto partition = orbit_partition(shape);
    const auto sf = splitting_field(shape);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::size_t> chosen;
      for (std::size_t o = 0; o < partition.size(); ++o) {
        if (rng() % 2) chosen.push_back(o);
      }
      const auto c = AbelianCode::from_defining_set(shape, partition.union_of(chosen));
      const auto e = generating_idempotent(c);
      CHECK(multiply(e, e) == e);
      CHECK(fourier_transform(e, sf).support() == c.defining_set().complement());
    }
  }
}

TEST_CASE("exhaustive mad") {
  CHECK(mad_bruteforce(fixtures::mad_matrix()) == 3);
  CHECK(mad_bruteforce(fixtures::mad_cube()) == 6);
  CHECK(mad_bruteforce(OrbitHypermatrix::ones(Shape(2, {5, 7}))) == 1);
  CHECK_THROWS_AS(mad_bruteforce(OrbitHypermatrix::ones(Shape(2, {5, 7})), 3), BudgetExceeded);
}

TEST_CASE("generator matrices") {
  const auto id = generator_matrix(code_from_orbits(Shape(2, {5}), {}));
  CHECK(id.k() == 5);
  CHECK(generator_matrix(code_from_orbits(Shape(2, {35}), {{1}, {5}})).k() == 20);
  CHECK_THROWS_AS(generator_matrix(code_from_orbits(Shape(4, {3}), {{1}})), ValidationError);

  std::mt19937_64 rng(47);
  for (const auto& [q, r] : std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>>{{2, {5, 7}}, {3, {4, 5}}, {2, {3, 3, 5}}}) {
    const Shape shape(q, r);
    const auto partition = orbit_partition(shape);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<std::size_t> chosen;
      for (std::size_t o = 0; o + 1 < partition.size(); ++o) {
        if (rng() % 2) chosen.push_back(o);
      }
      const auto c = AbelianCode::from_defining_set(shape, partition.union_of(chosen));
      CHECK(generator_matrix(c).k() + c.defining_set().count() == shape.size());
    }
  }
}

TEST_CASE("minimum distance") {
  // only the constants survive: repetition code
  const Shape rep(2, {3, 5});
  const auto partition = orbit_partition(rep);
  std::vector<std::size_t> all_but_zero;
  for (std::size_t o = 1; o < partition.size(); ++o) all_but_zero.push_back(o);
  CHECK(min_distance_bruteforce(AbelianCode::from_defining_set(rep, partition.union_of(all_but_zero))) == 15);

  CHECK(min_distance_bruteforce(code_from_orbits(Shape(2, {35}), {{1}, {5}})) == 6);
  CHECK(min_distance_bruteforce(code_from_orbits(Shape(2, {35}), {{1}, {5}, {7}})) == 7);
  CHECK(min_distance_bruteforce(code_from_orbits(Shape(2, {5, 7}), {{0, 1}, {0, 3}, {1, 3}})) == 6);
  CHECK(min_distance_bruteforce(code_from_orbits(Shape(2, {7}), {{1}})) == 3);    // Hamming
  CHECK(min_distance_bruteforce(code_from_orbits(Shape(3, {4}), {{1}})) == 2);    // ternary, q-ary walk
  CHECK(min_distance_bruteforce(code_from_orbits(Shape(3, {8}), {{1}, {2}})) >= 3);
  CHECK_THROWS_AS(min_distance_bruteforce(code_from_orbits(Shape(2, {5, 7}), {{0, 0}}), 1 << 20), BudgetExceeded);
}

TEST_CASE("ternary Gray walk matches direct enumeration") {
  const auto c = code_from_orbits(Shape(3, {2, 4}), {{0, 1}});
  const auto g = generator_matrix(c);
  std::uint64_t best = g.length;
  std::vector<std::uint32_t> coeff(g.k(), 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < g.k(); ++i) total *= 3;
  for (std::uint64_t n = 1; n < total; ++n) {
    std::uint64_t x = n;
    for (auto& a : coeff) { a = x % 3; x /= 3; }
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < g.length; ++i) {
      std::uint32_t v = 0;
      for (std::size_t r = 0; r < g.k(); ++r) v = (v + coeff[r] * g.rows[r][i]) % 3;
      w += v != 0;
    }
    best = std::min(best, w);
  }
  CHECK(min_distance_bruteforce(g) == best);
}

TEST_CASE("apparent distance never exceeds minimum distance") {
  std::mt19937_64 rng(53);
  for (const auto& [q, r] : std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>>{{2, {3, 5}}, {2, {5, 7}}, {3, {2, 4}}, {2, {3, 3, 5}}}) {
    const Shape shape(q, r);
    const auto partition = orbit_partition(shape);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<std::size_t> chosen;
      for (std::size_t o = 0; o + 1 < partition.size(); ++o) {
        if (rng() % 2) chosen.push_back(o);
      }
      const auto c = AbelianCode::from_defining_set(shape, partition.union_of(chosen));
      if (c.dimension() > 22) continue;
      CHECK(apparent_distance_code(c).value <= min_distance_bruteforce(c));
    }
  }
}

}  // TEST_SUITE
