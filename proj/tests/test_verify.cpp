#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fmb/catalog.hpp"
#include "fmb/constructions.hpp"
#include "fmb/error.hpp"
#include "fmb/verify.hpp"

using namespace fmb;

namespace {

struct Setup {
  Group g;
  Field f;
  Filtration filt;
  explicit Setup(const char* name, int k = 1)
      : g(group_from_spec(catalog_lookup(name))),
        f(field_make(group_prime(g), k)),
        filt(radical_filtration(g, f)) {}
};

}  // namespace

TEST_CASE("the C2 x C2 product basis is accepted") {
  Setup s("C2 x C2");
  auto cand = abelian_basis(s.g, s.f);
  auto rep = verify_fm_basis(s.g, s.f, s.filt, cand);
  CHECK(rep.is_basis);

  auto hist = basis_grading(s.filt, cand);
  CHECK(hist == std::map<int, int>{{0, 1}, {1, 2}, {2, 1}});

  // Duplicating an element breaks the rank.
  auto broken = cand;
  broken.elements[2] = broken.elements[1];
  auto rep2 = verify_fm_basis(s.g, s.f, s.filt, broken);
  CHECK_FALSE(rep2.is_basis);
  CHECK_FALSE(rep2.rank_ok);
}

TEST_CASE("dihedral words verify and grade correctly") {
  Setup s("D8");
  auto cand = dihedral_basis(s.g, s.f);
  auto rep = verify_fm_basis(s.g, s.f, s.filt, cand);
  CHECK(rep.is_basis);
  CHECK(rep.closure_failures.empty());
  auto hist = basis_grading(s.filt, cand);
  CHECK(hist == std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 1}});
}

TEST_CASE("histogram matches layer dimensions on accepted bases") {
  for (const char* name : {"D16", "H_16", "G_2"}) {
    Setup s(name);
    auto cand = construct_for(name, s.g, s.f);
    REQUIRE(verify_fm_basis(s.g, s.f, s.filt, cand).is_basis);
    auto hist = basis_grading(s.filt, cand);
    CHECK(hist[0] == 1);
    for (int t = 1; t <= s.filt.s; ++t) CHECK_MESSAGE(hist[t] == s.filt.dim_layer(t), name);
  }
}

TEST_CASE("size and shape errors") {
  Setup s("D8");
  BasisCandidate tiny;
  tiny.elements.assign(3, vec_one(8));
  CHECK_THROWS_WITH_AS(verify_fm_basis(s.g, s.f, s.filt, tiny), doctest::Contains("SizeMismatch"),
                       Error);

  // Missing identity in front.
  auto cand = dihedral_basis(s.g, s.f);
  std::swap(cand.elements[0], cand.elements[1]);
  auto rep = verify_fm_basis(s.g, s.f, s.filt, cand);
  CHECK_FALSE(rep.is_basis);
  CHECK_FALSE(rep.shape_ok);
}

TEST_CASE("closure failures are reported pair by pair") {
  Setup s("D8");
  auto cand = dihedral_basis(s.g, s.f);
  // Perturb a top element by a unit so some product leaves the set.
  cand.elements[7] = vec_add(s.f, cand.elements[7], vec_one(8));
  auto rep = verify_fm_basis(s.g, s.f, s.filt, cand);
  CHECK_FALSE(rep.is_basis);
  CHECK_FALSE(rep.closure_failures.empty());
}

TEST_CASE("mutation soundness across five accepted bases") {
  std::mt19937_64 rng(20240817);
  int rejected = 0, trials = 0;
  for (const char* name : {"D8", "D16", "H_16", "G_2", "C4 x C2"}) {
    Setup s(name);
    auto cand = construct_for(name, s.g, s.f);
    REQUIRE(verify_fm_basis(s.g, s.f, s.filt, cand).is_basis);
    const int n = s.g.order();
    for (int t = 0; t < 100; ++t) {
      auto mutated = cand;
      // Replace one element by a different random element of the same grade;
      // layers with a single nonzero vector cannot be mutated, pick again.
      while (true) {
        const int idx = 1 + static_cast<int>(rng() % (n - 1));
        const int grade = s.filt.grade(cand.elements[idx]);
        Vec v;
        bool found = false;
        for (int attempt = 0; attempt < 64 && !found; ++attempt) {
          v = vec_zero(n);
          for (const Vec& r : s.filt.power(grade).rows())
            if (rng() % 2) v = vec_add(s.f, v, r);
          found = s.filt.grade(v) == grade && v != cand.elements[idx];
        }
        if (!found) continue;
        mutated.elements[idx] = v;
        break;
      }
      ++trials;
      if (!verify_fm_basis(s.g, s.f, s.filt, mutated).is_basis) ++rejected;
    }
  }
  CHECK(trials == 500);
  CHECK(rejected >= trials * 99 / 100);
}

TEST_CASE("property II holds per grade on accepted bases") {
  Setup s("G_2");
  auto cand = theorem2_basis(s.g, s.f);
  auto rep = verify_fm_basis(s.g, s.f, s.filt, cand);
  CHECK(rep.is_basis);
  CHECK(rep.property2_ok);
}
