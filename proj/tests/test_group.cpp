#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fmb/catalog.hpp"
#include "fmb/error.hpp"
#include "fmb/group.hpp"

using namespace fmb;

namespace {

// Independent D8 oracle: elements a^i b^j with index 2i + j and the literal
// dihedral multiplication a^i b^j a^k b^l = a^{i + k (-1)^j mod 4} b^{j+l mod 2}.
Elt d8_oracle_mul(Elt x, Elt y) {
  int i = x / 2, j = x % 2, k = y / 2, l = y % 2;
  int ii = ((i + (j ? -k : k)) % 4 + 4) % 4;
  return static_cast<Elt>(2 * ii + (j + l) % 2);
}

}  // namespace

TEST_CASE("D8 table matches the literal dihedral oracle") {
  Group d8 = group_from_spec(catalog_lookup("D8"));
  REQUIRE(d8.order() == 8);
  for (Elt x = 0; x < 8; ++x)
    for (Elt y = 0; y < 8; ++y) REQUIRE(d8.mul(x, y) == d8_oracle_mul(x, y));
  CHECK(commutator(d8, d8.gen(0), d8.gen(1)) == d8.pow(d8.gen(0), 2));
}

TEST_CASE("catalog orders match the declared ones") {
  for (const auto& name : catalog_names()) {
    Group g = group_from_spec(catalog_lookup(name));
    CHECK_MESSAGE(g.order() == g.spec().declared_order(), name);
    if (name.rfind("G_", 0) == 0) CHECK_MESSAGE(g.order() == 32, name);
  }
}

TEST_CASE("dihedral and quaternion conjugation inverts a") {
  for (const char* name : {"D16", "D32", "Q16", "Q32"}) {
    Group g = group_from_spec(catalog_lookup(name));
    Elt a = g.gen(0), b = g.gen(1);
    CHECK(g.mul(g.mul(g.inverse(b), a), b) == g.inverse(a));
  }
  Group sd = group_from_spec(catalog_lookup("SD16"));
  Elt a = sd.gen(0), b = sd.gen(1);
  CHECK(sd.mul(sd.mul(sd.inverse(b), a), b) == sd.pow(a, 3));
}

TEST_CASE("H_16 has (a,c) = b and order 16") {
  Group h = group_from_spec(catalog_lookup("H_16"));
  CHECK(h.order() == 16);
  Elt a = h.gen(0), c = h.gen(1), b = h.gen(2);
  CHECK(commutator(h, a, c) == b);
  CHECK(commutator(h, a, b) == 0);
  CHECK(commutator(h, b, c) == 0);
}

TEST_CASE("T2(2,2) is G_2 of order 32") {
  Group g = group_from_spec(catalog_lookup("T2", {.n = 2, .m = 2}));
  CHECK(g.order() == 32);
  Group g2 = group_from_spec(catalog_lookup("G_2"));
  CHECK(g2.order() == 32);
  CHECK(commutator(g, g.gen(1), g.gen(0)) == g.gen(2));
}

TEST_CASE("direct products multiply componentwise") {
  Group d8 = group_from_spec(catalog_lookup("D8"));
  Group c2 = group_from_spec(catalog_lookup("C2"));
  Group prod = direct_product(d8, c2);
  REQUIRE(prod.order() == 16);
  for (Elt x1 = 0; x1 < 8; ++x1)
    for (Elt x2 = 0; x2 < 2; ++x2)
      for (Elt y1 = 0; y1 < 8; ++y1)
        for (Elt y2 = 0; y2 < 2; ++y2) {
          Elt x = static_cast<Elt>(x1 * 2 + x2), y = static_cast<Elt>(y1 * 2 + y2);
          REQUIRE(prod.mul(x, y) == d8.mul(x1, y1) * 2 + c2.mul(x2, y2));
        }

  Group q8 = group_from_spec(catalog_lookup("Q8"));
  Group g47 = direct_product(direct_product(q8, c2), c2);
  CHECK(g47.order() == 32);

  Group c2c2 = direct_product(c2, c2);
  CHECK(c2c2.order() == 4);
  for (Elt x = 0; x < 4; ++x) CHECK(c2c2.mul(x, x) == 0);

  Group c16 = group_from_spec(catalog_lookup("C16"));
  CHECK_THROWS_WITH_AS(direct_product(c16, c16, 128), doctest::Contains("OrderOverflow"), Error);
}

TEST_CASE("subgroup generation") {
  Group d8 = group_from_spec(catalog_lookup("D8"));
  Elt a = d8.gen(0), b = d8.gen(1);
  auto z = subgroup_generated(d8, {d8.pow(a, 2)});
  CHECK(z == std::vector<Elt>{0, d8.pow(a, 2)});
  CHECK(subgroup_generated(d8, {a, b}).size() == 8);

  Group h1 = group_from_spec(catalog_lookup("H_1", {.p = 5}));
  CHECK(subgroup_generated(h1, {h1.gen(3)}).size() == 5);
}

TEST_CASE("Lazard-Jennings series") {
  Group h1 = group_from_spec(catalog_lookup("H_1", {.p = 5}));
  auto chain = lazard_series(h1, 5);
  // M_2 = <d,f>, M_3 = <f>, M_4 = 1
  REQUIRE(chain.terms.size() == 4);
  CHECK(chain.terms[1] == subgroup_generated(h1, {h1.gen(2), h1.gen(3)}));
  CHECK(chain.terms[2] == subgroup_generated(h1, {h1.gen(3)}));
  CHECK(chain.terms[3].size() == 1);

  Group t3 = group_from_spec(catalog_lookup("T3", {.n = 2}));
  auto c3 = lazard_series(t3, 2);
  REQUIRE(c3.terms.size() == 4);
  CHECK(c3.terms[1] ==
        subgroup_generated(t3, {t3.pow(t3.gen(0), 2), t3.gen(2), t3.gen(3)}));
  CHECK(c3.terms[2] == subgroup_generated(t3, {t3.gen(3)}));

  Group g27 = group_from_spec(catalog_lookup("G_27"));
  auto c27 = lazard_series(g27, 2);
  REQUIRE(c27.terms.size() == 3);
  CHECK(c27.terms[1] == subgroup_generated(g27, {g27.gen(3), g27.gen(4)}));

  // Terms are normal with elementary abelian factors.
  for (const char* name : {"D8", "Q16", "G_49", "G_50", "H_16"}) {
    Group g = group_from_spec(catalog_lookup(name));
    auto chain2 = lazard_series(g, 2);
    for (size_t i = 0; i + 1 < chain2.terms.size(); ++i) {
      const auto& term = chain2.terms[i];
      const auto& next = chain2.terms[i + 1];
      std::vector<char> in_term(g.order(), 0), in_next(g.order(), 0);
      for (Elt x : term) in_term[x] = 1;
      for (Elt x : next) in_next[x] = 1;
      for (Elt x : term) {
        CHECK(in_next[g.pow(x, 2)]);  // p-th powers drop a level
        for (Elt y = 0; y < g.order(); ++y) {
          CHECK(in_term[g.mul(g.mul(g.inverse(y), x), y)]);  // normality
          if (in_term[y]) CHECK(in_next[commutator(g, x, y)]);  // factor abelian
        }
      }
    }
  }
}

TEST_CASE("powerful predicate") {
  CHECK(is_powerful(group_from_spec(catalog_lookup("G_4")), 2));
  CHECK_FALSE(is_powerful(group_from_spec(catalog_lookup("D8")), 2));
  CHECK(is_powerful(group_from_spec(catalog_lookup("C4 x C2")), 2));
  CHECK(is_powerful(group_from_spec(catalog_lookup("G_38")), 2));
}

TEST_CASE("group text round trip") {
  GroupSpec s = catalog_lookup("G_49");
  auto lines = group_text(s);
  GroupSpec back = parse_group_text(lines, s.name);
  CHECK(back.gens == s.gens);
  CHECK(back.relorders == s.relorders);
  CHECK(back.commrels == s.commrels);
  Group g = group_from_spec(back);
  CHECK(g.order() == 32);
}

TEST_CASE("unknown labels and bad parameters") {
  CHECK_THROWS_WITH_AS(catalog_lookup("Z99"), doctest::Contains("UnknownLabel"), Error);
  CHECK_THROWS_WITH_AS(catalog_lookup("H_1", {.p = 3}), doctest::Contains("BadParams"), Error);
  CHECK_THROWS_WITH_AS(catalog_lookup("C6"), doctest::Contains("BadParams"), Error);
}

TEST_CASE("inconsistent presentation is rejected") {
  // a^2 = b with b^2 = a forces a collapse: the presented group is cyclic of
  // order 3, not 4.
  GroupSpec s;
  s.name = "bad";
  s.gens = {"a", "b"};
  s.relorders = {2, 2};
  s.powerrels = {Word{{1, 1}}, Word{{0, 1}}};
  CHECK_THROWS_AS(group_from_spec(s), Error);
}
