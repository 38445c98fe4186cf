#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fmb/error.hpp"
#include "fmb/field.hpp"

using namespace fmb;

TEST_CASE("prime fields and defaults") {
  Field f2 = field_make(2, 1);
  CHECK(f2.q() == 2);
  CHECK(f2.modulus() == std::vector<int>{0, 1});

  std::vector<int> m{1, 1, 1};
  Field f4 = field_make(2, 2, &m);
  CHECK(f4.q() == 4);
  Field f4d = field_make(2, 2);
  CHECK(f4d.modulus() == m);  // unique irreducible quadratic over GF(2)

  CHECK_THROWS_WITH_AS(field_make(4, 1), doctest::Contains("NotPrime"), Error);
  std::vector<int> red{1, 0, 1};  // x^2+1 = (x+1)^2 over GF(2)
  CHECK_THROWS_WITH_AS(field_make(2, 2, &red), doctest::Contains("ReducibleModulus"), Error);
}

TEST_CASE("determinism of field_make") {
  for (auto [p, k] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}, {7, 2}}) {
    Field a = field_make(p, k), b = field_make(p, k);
    CHECK(a == b);
  }
  // Spot-check chosen moduli.
  CHECK(field_make(3, 2).modulus() == std::vector<int>{1, 0, 1});
  CHECK(field_make(5, 2).modulus() == std::vector<int>{1, 1, 1});
  CHECK(field_make(7, 2).modulus() == std::vector<int>{1, 0, 1});
}

TEST_CASE("GF(4) arithmetic forced by x^2+x+1") {
  Field f = field_make(2, 2);
  const Fel w = 2;  // x
  CHECK(f.mul(w, w) == 3);  // w^2 = w+1
  CHECK(f.inv(w) == 3);
  CHECK(f.add(w, 3) == 1);
  CHECK_THROWS_WITH_AS(f.inv(0), doctest::Contains("DivisionByZero"), Error);
}

TEST_CASE("GF(3) addition") {
  Field f = field_make(3, 1);
  CHECK(f.add(2, 2) == 1);
}

TEST_CASE("field axioms, exhaustive for q <= 49") {
  for (auto [p, k] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}, {7, 2}}) {
    Field f = field_make(p, k);
    const int q = f.q();
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; ++c) {
          REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("primitive cube roots") {
  CHECK(!has_primitive_cube_root(field_make(2, 1)));
  CHECK(!has_primitive_cube_root(field_make(3, 1)));
  CHECK(!has_primitive_cube_root(field_make(3, 2)));
  CHECK(!has_primitive_cube_root(field_make(5, 1)));

  auto w4 = has_primitive_cube_root(field_make(2, 2));
  REQUIRE(w4.has_value());
  Field f4 = field_make(2, 2);
  CHECK(f4.mul(*w4, f4.mul(*w4, *w4)) == 1);
  CHECK(*w4 != 1);

  auto w7 = has_primitive_cube_root(field_make(7, 1));
  REQUIRE(w7.has_value());
  CHECK(*w7 == 2);  // 2^3 = 8 = 1 mod 7

  CHECK(has_primitive_cube_root(field_make(5, 2)).has_value());
  CHECK(has_primitive_cube_root(field_make(7, 2)).has_value());
}
