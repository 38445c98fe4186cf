#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fmb/catalog.hpp"
#include "fmb/constructions.hpp"
#include "fmb/error.hpp"
#include "fmb/search.hpp"

using namespace fmb;

TEST_CASE("small positive cases are found quickly") {
  Group g = group_from_spec(catalog_lookup("C2 x C2"));
  Field f = field_make(2, 1);
  SearchConfig cfg;
  cfg.max_nodes = 1000;
  auto res = dfs_search(g, f, cfg);
  REQUIRE(res.status == SearchStatus::Found);
  CHECK(res.nodes < 1000);
  Filtration filt = radical_filtration(g, f);
  CHECK(verify_fm_basis(g, f, filt, res.candidate).is_basis);
}

TEST_CASE("Q8 over GF(4) is found within budget") {
  Group g = group_from_spec(catalog_lookup("Q8"));
  Field f4 = field_make(2, 2);
  SearchConfig cfg;
  cfg.max_nodes = 100'000'000;
  auto res = dfs_search(g, f4, cfg);
  REQUIRE(res.status == SearchStatus::Found);
  Filtration filt = radical_filtration(g, f4);
  CHECK(verify_fm_basis(g, f4, filt, res.candidate).is_basis);
}

TEST_CASE("Q8 over GF(2) is exhausted completely") {
  Group g = group_from_spec(catalog_lookup("Q8"));
  Field f2 = field_make(2, 1);
  SearchConfig cfg;
  cfg.exhaustive = true;
  auto res = dfs_search(g, f2, cfg);
  CHECK(res.status == SearchStatus::NotFoundComplete);
  CHECK(res.complete);
}

TEST_CASE("budget exhaustion is distinct from a completed sweep") {
  Group g = group_from_spec(catalog_lookup("D16"));
  Field f = field_make(2, 1);
  SearchConfig cfg;
  cfg.max_nodes = 2;
  auto res = dfs_search(g, f, cfg);
  CHECK(res.status == SearchStatus::BudgetExhausted);
  CHECK_FALSE(res.complete);
}

TEST_CASE("determinism: repeated runs return identical candidates") {
  Group g = group_from_spec(catalog_lookup("D8"));
  Field f = field_make(2, 1);
  auto a = dfs_search(g, f);
  auto b = dfs_search(g, f);
  REQUIRE(a.status == SearchStatus::Found);
  REQUIRE(b.status == SearchStatus::Found);
  CHECK(a.candidate.elements == b.candidate.elements);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("search never reports not-found where a construction verifies") {
  struct Case {
    const char* name;
    int k;
  };
  for (auto c : {Case{"C2", 1}, {"C4", 1}, {"C2 x C2", 1}, {"C4 x C2", 1}, {"C8", 1},
                 {"D8", 1}, {"D16", 1}, {"H_16", 1}, {"D8 x C2", 1}, {"Q8", 2}}) {
    Group g = group_from_spec(catalog_lookup(c.name));
    Field f = field_make(group_prime(g), c.k);
    Filtration filt = radical_filtration(g, f);
    auto cand = construct_for(c.name, g, f);
    REQUIRE_MESSAGE(verify_fm_basis(g, f, filt, cand).is_basis, c.name);
    auto res = dfs_search(g, f);
    CHECK_MESSAGE(res.status == SearchStatus::Found, c.name);
  }
}

TEST_CASE("seed letters pin the configuration") {
  Group g = group_from_spec(catalog_lookup("D8"));
  Field f = field_make(2, 1);
  SearchConfig cfg;
  cfg.seed_letters = {elem_minus_one(g, f, g.gen(1)),
                      elem_minus_one(g, f, g.mul(g.gen(0), g.gen(1)))};
  cfg.correction_depth = 0;
  auto res = dfs_search(g, f, cfg);
  CHECK(res.status == SearchStatus::Found);
  CHECK_FALSE(res.complete);
}
