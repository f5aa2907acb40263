#include <doctest.h>

#include <random>

#include "abelian/errors.hpp"
#include "abelian/field.hpp"

using namespace abelian;

TEST_SUITE("field") {

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(2, {1, 1, 1}));         // x^2 + x + 1
  CHECK_FALSE(is_irreducible(2, {1, 0, 1}));   // (x + 1)^2
  CHECK(is_irreducible(2, {1, 1, 0, 0, 1}));   // x^4 + x + 1
  CHECK(is_irreducible(3, {1, 0, 1}));         // x^2 + 1 over F_3
  CHECK_FALSE(is_irreducible(5, {1, 0, 1}));   // x^2 + 1 = (x - 2)(x + 2) over F_5
  CHECK_THROWS_AS(Field(2, std::vector<std::uint32_t>{1, 0, 1}), ValidationError);
}

TEST_CASE("F_4 multiplication table") {
  const Field f(2, 2U);
  CHECK(f.order() == 4);
  // elements 0, 1, x, x + 1 with x^2 = x + 1
  const FieldElement x{2}, x1{3};
  CHECK(f.mul(x, x) == x1);
  CHECK(f.mul(x, x1) == f.one());
  CHECK(f.inv(x) == x1);
  CHECK(f.add(x, x1) == f.one());
  CHECK(f.element_order(x) == 3);
  CHECK_THROWS(f.inv(f.zero()));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(11);
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 4}, {2, 12}, {3, 2}, {5, 3}, {7, 1}}) {
    const Field f(p, m);
    auto rand_el = [&] { return FieldElement{rng() % f.order()}; };
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = rand_el(), b = rand_el(), c = rand_el();
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.add(a, f.neg(a)) == f.zero());
      CHECK(f.sub(f.add(a, b), b) == a);
      if (a != f.zero()) {
        CHECK(f.mul(a, f.inv(a)) == f.one());
        CHECK(f.pow(a, f.order() - 1) == f.one());
      }
    }
  }
}

TEST_CASE("coefficients round trip") {
  const Field f(3, 3U);
  const std::vector<std::uint32_t> c{2, 0, 1};
  CHECK(f.coefficients(f.from_coefficients(c)) == c);
  CHECK(f.from_int(-1) == FieldElement{2});
  CHECK(f.in_prime_field(f.from_int(5)));
}

TEST_CASE("splitting field roots have the right orders") {
  const auto sf = splitting_field(Shape(2, {5, 7}));
  CHECK(sf.field.order() == 4096);
  CHECK(sf.field.element_order(sf.generator) == 4095);
  CHECK(sf.field.element_order(sf.roots[0]) == 5);
  CHECK(sf.field.element_order(sf.roots[1]) == 7);

  const auto sf3 = splitting_field(Shape(3, {2, 4}));
  CHECK(sf3.field.order() == 9);
  CHECK(sf3.field.element_order(sf3.roots[1]) == 4);

  CHECK_THROWS_AS(splitting_field(Shape(4, {3})), ValidationError);
}

}  // TEST_SUITE
