#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fmb/algebra.hpp"
#include "fmb/catalog.hpp"
#include "fmb/error.hpp"

using namespace fmb;

namespace {

// Plain convolution oracle, independent of alg_mul's support iteration.
Vec oracle_mul(const Group& g, const Field& f, const Vec& x, const Vec& y) {
  Vec z(g.order(), 0);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      z[g.mul(u, v)] = f.add(z[g.mul(u, v)], f.mul(x[u], y[v]));
  return z;
}

Vec gm1(const Group& g, const Field& f, Elt x) { return elem_minus_one(g, f, x); }

}  // namespace

TEST_CASE("algebra multiplication basics") {
  Group d8 = group_from_spec(catalog_lookup("D8"));
  Field f2 = field_make(2, 1);

  Vec one = vec_one(8);
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Vec y(8);
    for (auto& c : y) c = rng() % 2;
    CHECK(alg_mul(d8, f2, one, y) == y);
    Vec x(8), z(8);
    for (auto& c : x) c = rng() % 2;
    for (auto& c : z) c = rng() % 2;
    CHECK(alg_mul(d8, f2, x, y) == oracle_mul(d8, f2, x, y));
    CHECK(alg_mul(d8, f2, alg_mul(d8, f2, x, y), z) ==
          alg_mul(d8, f2, x, alg_mul(d8, f2, y, z)));
  }

  // (1+a)^2 = 0 in KC2.
  Group c2 = group_from_spec(catalog_lookup("C2"));
  Vec v = gm1(c2, f2, c2.gen(0));
  CHECK(vec_is_zero(alg_mul(c2, f2, v, v)));

  // (1+b)(1+ab) has augmentation 0.
  Elt ab = d8.mul(d8.gen(0), d8.gen(1));
  Vec prod = alg_mul(d8, f2, gm1(d8, f2, d8.gen(1)), gm1(d8, f2, ab));
  CHECK(augmentation(f2, prod) == 0);
}

TEST_CASE("augmentation is a ring homomorphism") {
  Group g = group_from_spec(catalog_lookup("H_2(3)"));
  Field f = field_make(3, 1);
  CHECK(augmentation(f, vec_one(g.order())) == 1);
  CHECK(augmentation(f, gm1(g, f, 5)) == 0);
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    Vec x(g.order()), y(g.order());
    for (auto& c : x) c = rng() % 3;
    for (auto& c : y) c = rng() % 3;
    CHECK(augmentation(f, alg_mul(g, f, x, y)) ==
          f.mul(augmentation(f, x), augmentation(f, y)));
    CHECK(augmentation(f, vec_add(f, x, y)) == f.add(augmentation(f, x), augmentation(f, y)));
  }
  // Group sum over GF(2) in D8: 8 = 0.
  Group d8 = group_from_spec(catalog_lookup("D8"));
  Field f2 = field_make(2, 1);
  Vec sum(8, 1);
  CHECK(augmentation(f2, sum) == 0);
}

TEST_CASE("radical filtration dimensions") {
  Field f2 = field_make(2, 1);

  Group c2 = group_from_spec(catalog_lookup("C2"));
  Filtration fc2 = radical_filtration(c2, f2);
  CHECK(fc2.s == 1);
  CHECK(fc2.dim_power(1) == 1);

  Group d8 = group_from_spec(catalog_lookup("D8"));
  Filtration fd8 = radical_filtration(d8, f2);
  CHECK(fd8.dim_power(1) == 7);
  CHECK(fd8.layer_dims == std::vector<int>{2, 2, 2, 1});

  Group h23 = group_from_spec(catalog_lookup("H_2(3)"));
  Field f3 = field_make(3, 1);
  Filtration fh = radical_filtration(h23, f3);
  CHECK(fh.dim_layer(1) == 3);
  CHECK(fh.dim_layer(2) == 7);
  CHECK(fh.dim_layer(3) == 10);

  CHECK_THROWS_WITH_AS(radical_filtration(d8, f3), doctest::Contains("CharacteristicMismatch"),
                       Error);
}

TEST_CASE("dim A = |G| - 1 and graded products across the catalog") {
  for (const char* name : {"C4 x C2", "Q8", "G_27", "G_50", "H_2(3)"}) {
    Group g = group_from_spec(catalog_lookup(name));
    Field f = field_make(group_prime(g), 1);
    Filtration filt = radical_filtration(g, f);
    CHECK(filt.dim_power(1) == g.order() - 1);
    // Products of layer basis rows respect the grading.
    for (int i = 1; i <= filt.s; ++i)
      for (int j = 1; i + j <= filt.s + 1 && j <= filt.s; ++j) {
        const auto& ri = filt.power(i).rows();
        const auto& rj = filt.power(j).rows();
        for (size_t ii = 0; ii < ri.size(); ii += 3)
          for (size_t jj = 0; jj < rj.size(); jj += 3) {
            Vec prod = alg_mul(g, f, ri[ii], rj[jj]);
            CHECK(filt.power(std::min(i + j, filt.s + 1)).contains(prod));
          }
      }
  }
}

TEST_CASE("reduce_mod canonical remainders") {
  Group d8 = group_from_spec(catalog_lookup("D8"));
  Field f2 = field_make(2, 1);
  Filtration filt = radical_filtration(d8, f2);

  const Subspace& a3 = filt.power(3);
  for (const Vec& row : a3.rows()) CHECK(vec_is_zero(reduce_mod(a3, row)));
  CHECK(vec_is_zero(reduce_mod(a3, vec_zero(8))));

  Vec prod = alg_mul(d8, f2, gm1(d8, f2, d8.gen(0)), gm1(d8, f2, d8.gen(1)));
  CHECK_FALSE(vec_is_zero(reduce_mod(a3, prod)));  // (1+a)(1+b) has grade 2

  // Linearity.
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    Vec x(8), y(8);
    for (auto& c : x) c = rng() % 2;
    for (auto& c : y) c = rng() % 2;
    CHECK(reduce_mod(a3, vec_add(f2, x, y)) ==
          vec_add(f2, reduce_mod(a3, x), reduce_mod(a3, y)));
  }
}

TEST_CASE("graded_class") {
  Group h1 = group_from_spec(catalog_lookup("H_1(5)"));
  Field f5 = field_make(5, 1);
  Filtration filt = radical_filtration(h1, f5);
  CHECK(graded_class(filt, vec_one(h1.order())).first == 0);
  CHECK(graded_class(filt, gm1(h1, f5, h1.gen(3))).first == 3);  // f - 1
  CHECK(graded_class(filt, gm1(h1, f5, h1.gen(2))).first == 2);  // d - 1
  CHECK(graded_class(filt, vec_zero(h1.order())).first == kGradeInfinity);

  Group t3 = group_from_spec(catalog_lookup("T3(2)"));
  Field f2 = field_make(2, 1);
  Filtration ft = radical_filtration(t3, f2);
  CHECK(graded_class(ft, gm1(t3, f2, t3.gen(2))).first == 2);  // c - 1
}

TEST_CASE("dimension subgroups equal the Lazard series") {
  for (const char* name : {"D8", "H_16", "G_49", "G_27", "H_2(3)", "H_1(5)", "C4 x C4"}) {
    Group g = group_from_spec(catalog_lookup(name));
    const int p = group_prime(g);
    Field f = field_make(p, 1);
    Filtration filt = radical_filtration(g, f);
    auto chain = lazard_series(g, p);
    for (int n = 1; n <= filt.s + 1; ++n) {
      auto dn = dimension_subgroup(g, filt, n);
      auto mn = n <= static_cast<int>(chain.terms.size()) ? chain.terms[n - 1]
                                                          : std::vector<Elt>{0};
      CHECK_MESSAGE(dn == mn, name << " at n=" << n);
    }
  }
  // n = 2 is the Frattini subgroup: quotient by it is elementary abelian.
  Group d8 = group_from_spec(catalog_lookup("D8"));
  Field f2 = field_make(2, 1);
  Filtration filt = radical_filtration(d8, f2);
  auto d2 = dimension_subgroup(d8, filt, 2);
  CHECK(d2 == subgroup_generated(d8, {d8.pow(d8.gen(0), 2)}));
}

TEST_CASE("group algebra identity for unit pairs") {
  for (const char* name : {"D8", "G_50", "H_2(3)"}) {
    Group g = group_from_spec(catalog_lookup(name));
    Field f = field_make(group_prime(g), 1);
    const int n = g.order();
    std::mt19937 rng(99);
    for (int t = 0; t < 40; ++t) {
      Elt x = static_cast<Elt>(rng() % n), y = static_cast<Elt>(rng() % n);
      Elt z = commutator(g, y, x);
      Vec xm = gm1(g, f, x), ym = gm1(g, f, y), zm = gm1(g, f, z);
      // (y-1)(x-1) = [(x-1)(y-1)+(x-1)+(y-1)](z-1) + (x-1)(y-1) + (z-1)
      Vec lhs = alg_mul(g, f, ym, xm);
      Vec bracket = vec_add(f, alg_mul(g, f, xm, ym), vec_add(f, xm, ym));
      Vec rhs = vec_add(f, alg_mul(g, f, bracket, zm),
                        vec_add(f, alg_mul(g, f, xm, ym), zm));
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("commutator congruence modulo A^3") {
  for (const char* name : {"D8", "G_23", "G_49", "H_2(3)"}) {
    Group g = group_from_spec(catalog_lookup(name));
    Field f = field_make(group_prime(g), 1);
    Filtration filt = radical_filtration(g, f);
    // For minimal generators u, v: (u-1)(v-1) - (v-1)(u-1) - ((u,v)-1) lies in A^3.
    auto mingens = dimension_subgroup(g, filt, 2);
    std::vector<char> frattini(g.order(), 0);
    for (Elt m : mingens) frattini[m] = 1;
    for (Elt u = 0; u < g.order(); ++u) {
      if (frattini[u]) continue;
      for (Elt v = 0; v < g.order(); ++v) {
        if (frattini[v]) continue;
        Vec um = gm1(g, f, u), vm = gm1(g, f, v);
        Vec lhs = vec_sub(f, alg_mul(g, f, um, vm), alg_mul(g, f, vm, um));
        Vec rhs = gm1(g, f, commutator(g, u, v));
        REQUIRE(filt.power(3).contains(vec_sub(f, lhs, rhs)));
      }
    }
  }
}

TEST_CASE("quotient algebra") {
  Group d8 = group_from_spec(catalog_lookup("D8"));
  Field f2 = field_make(2, 1);
  Filtration filt = radical_filtration(d8, f2);

  Quotient q1 = quotient_algebra(d8, f2, filt, 1);
  for (Elt x = 1; x < 8; ++x) CHECK(vec_is_zero(q1.reduce(gm1(d8, f2, x))));

  Quotient qs = quotient_algebra(d8, f2, filt, filt.s + 1);
  Vec v = gm1(d8, f2, 5);
  CHECK(qs.reduce(v) == v);

  Quotient q3 = quotient_algebra(d8, f2, filt, 3);
  Vec ab = alg_mul(d8, f2, gm1(d8, f2, d8.gen(0)), gm1(d8, f2, d8.gen(1)));
  Vec ba = alg_mul(d8, f2, gm1(d8, f2, d8.gen(1)), gm1(d8, f2, d8.gen(0)));
  Vec diff = q3.reduce(vec_sub(f2, ab, ba));
  CHECK(diff == q3.reduce(gm1(d8, f2, d8.pow(d8.gen(0), 2))));
  CHECK_FALSE(vec_is_zero(diff));

  // Associativity in the quotient.
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    Vec x(8), y(8), z(8);
    for (auto& c : x) c = rng() % 2;
    for (auto& c : y) c = rng() % 2;
    for (auto& c : z) c = rng() % 2;
    CHECK(q3.mul(q3.mul(x, y), z) == q3.mul(x, q3.mul(y, z)));
  }

  CHECK_THROWS_WITH_AS(quotient_algebra(d8, f2, filt, 99), doctest::Contains("BadTruncation"),
                       Error);
}
