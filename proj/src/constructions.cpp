#include "fmb/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

#include "fmb/catalog.hpp"
#include "fmb/error.hpp"
#include "fmb/search.hpp"

namespace fmb {
namespace {

std::string key_of(const Vec& v) { return std::string(v.begin(), v.end()); }

bool is_abelian(const Group& g) {
  for (Elt x = 0; x < g.order(); ++x)
    for (Elt y = 0; y < x; ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

// Cyclic decomposition of an abelian p-group: greedy by descending element
// order, with a backtracking fallback.
bool extend_decomposition(const Group& g, const std::vector<Elt>& by_order,
                          std::vector<Elt>& chosen, std::vector<Elt>& span) {
  if (static_cast<int>(span.size()) == g.order()) return true;
  for (Elt x : by_order) {
    if (x == 0) continue;
    const long long target = static_cast<long long>(span.size()) * g.order_of(x);
    if (target > g.order()) continue;
    std::vector<Elt> seeds(span);
    seeds.push_back(x);
    auto bigger = subgroup_generated(g, seeds);
    if (static_cast<long long>(bigger.size()) != target) continue;
    chosen.push_back(x);
    std::vector<Elt> saved(span);
    span = std::move(bigger);
    if (extend_decomposition(g, by_order, chosen, span)) return true;
    chosen.pop_back();
    span = std::move(saved);
  }
  return false;
}

}  // namespace

BasisCandidate abelian_basis(const Group& g, const Field& f) {
  if (!is_abelian(g)) fail("NotAbelian", g.spec().name + " is not abelian");
  std::vector<Elt> by_order(g.order());
  for (int x = 0; x < g.order(); ++x) by_order[x] = static_cast<Elt>(x);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elt a, Elt b) { return g.order_of(a) > g.order_of(b); });
  std::vector<Elt> chosen, span{0};
  if (!extend_decomposition(g, by_order, chosen, span))
    fail("NotAbelian", "no cyclic decomposition found for " + g.spec().name);

  BasisCandidate cand;
  cand.source = "abelian product basis for " + g.spec().name;
  std::vector<int> orders;
  for (Elt a : chosen) orders.push_back(g.order_of(a));
  std::vector<Vec> factor(chosen.size());
  for (size_t i = 0; i < chosen.size(); ++i) factor[i] = elem_minus_one(g, f, chosen[i]);

  std::vector<int> exps(chosen.size(), 0);
  while (true) {
    Vec v = vec_one(g.order());
    for (size_t i = 0; i < chosen.size(); ++i)
      for (int e = 0; e < exps[i]; ++e) v = alg_mul(g, f, v, factor[i]);
    cand.elements.push_back(std::move(v));
    int i = static_cast<int>(chosen.size()) - 1;
    while (i >= 0 && ++exps[i] == orders[i]) exps[i--] = 0;
    if (i < 0) break;
  }
  return cand;
}

BasisCandidate product_basis(const Group& gprod, const Field& f, const Group& g1,
                             const BasisCandidate& b1, const Group& g2,
                             const BasisCandidate& b2) {
  if (gprod.order() != g1.order() * g2.order())
    fail("SizeMismatch", "product group order does not match the factors");
  if (b1.elements.size() != static_cast<size_t>(g1.order()) ||
      b2.elements.size() != static_cast<size_t>(g2.order()))
    fail("SizeMismatch", "factor bases have the wrong size");
  BasisCandidate cand;
  cand.source = "product of [" + b1.source + "] and [" + b2.source + "]";
  const int n2 = g2.order();
  for (const Vec& x : b1.elements)
    for (const Vec& y : b2.elements) {
      Vec v(gprod.order(), 0);
      for (int i = 0; i < g1.order(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n2; ++j)
          if (y[j]) v[i * n2 + j] = f.mul(x[i], y[j]);
      }
      cand.elements.push_back(std::move(v));
    }
  return cand;
}

BasisCandidate dihedral_basis(const Group& g, const Field& f) {
  if (f.p() != 2) fail("BadParam", "dihedral basis needs characteristic 2");
  const int h = g.order() / 2;
  if (g.order() < 8 || (g.order() & (g.order() - 1)) != 0)
    fail("BadParam", "dihedral basis needs order 2^n >= 8");
  Vec u = elem_minus_one(g, f, g.gen(1));                   // 1+b
  Vec v = elem_minus_one(g, f, g.mul(g.gen(0), g.gen(1)));  // 1+ab
  BasisCandidate cand;
  cand.source = "alternating dihedral words for " + g.spec().name;
  cand.elements.push_back(vec_one(g.order()));
  Vec ualt = u, valt = v;  // alternating words starting with u resp. v
  for (int len = 1; len < h; ++len) {
    cand.elements.push_back(ualt);
    cand.elements.push_back(valt);
    ualt = alg_mul(g, f, ualt, len % 2 ? v : u);
    valt = alg_mul(g, f, valt, len % 2 ? u : v);
  }
  // The two top words coincide.
  if (ualt != valt) fail("BadParam", "top alternating words differ in " + g.spec().name);
  cand.elements.push_back(ualt);
  return cand;
}

BasisCandidate theorem2_basis(const Group& g, const Field& f) {
  if (f.p() != 2) fail("BadParam", "word chain needs characteristic 2");
  if (g.ngens() < 2) fail("BadParam", "word chain needs two generators");
  const Vec u = elem_minus_one(g, f, g.gen(0));
  const Vec v = elem_minus_one(g, f, g.gen(1));

  struct Entry {
    std::string word;  // over letters 'u', 'v'
    Vec value;
  };
  std::vector<std::vector<Entry>> layers;
  layers.push_back({{"u", u}, {"v", v}});

  std::unordered_set<std::string> seen_words{"u", "v"};
  std::unordered_set<std::string> seen_values{key_of(u), key_of(v)};
  int total = 1 + 2;

  auto push = [&](std::vector<Entry>& layer, std::string word, Vec value) {
    if (!seen_words.insert(word).second) return;
    if (vec_is_zero(value)) return;
    if (!seen_values.insert(key_of(value)).second) return;
    layer.push_back({std::move(word), std::move(value)});
  };

  {
    std::vector<Entry> two;
    push(two, "uv", alg_mul(g, f, u, v));
    push(two, "vu", alg_mul(g, f, v, u));
    push(two, "uu", alg_mul(g, f, u, u));
    push(two, "vv", alg_mul(g, f, v, v));
    total += static_cast<int>(two.size());
    layers.push_back(std::move(two));
  }
  while (!layers.back().empty() && total < g.order()) {
    std::vector<Entry> next;
    for (const Entry& e : layers.back()) push(next, "u" + e.word, alg_mul(g, f, u, e.value));
    for (const Entry& e : layers.back()) push(next, e.word + "v", alg_mul(g, f, e.value, v));
    total += static_cast<int>(next.size());
    layers.push_back(std::move(next));
  }
  if (total != g.order())
    fail("ConstructionFailed",
         "word chain closed at " + std::to_string(total) + " elements in " + g.spec().name);
  BasisCandidate cand;
  cand.source = "two-letter word chain for " + g.spec().name;
  cand.elements.push_back(vec_one(g.order()));
  for (auto& layer : layers)
    for (auto& e : layer) cand.elements.push_back(std::move(e.value));
  return cand;
}

BasisCandidate g49_basis(const Group& g, const Field& f, long long budget) {
  if (f.p() != 2) fail("BadParam", "the recipe needs characteristic 2");
  if (g.ngens() != 4 || g.order() != 32)
    fail("BadParam", "expected the order-32 four-generator group");
  auto lm1 = [&](int i) { return elem_minus_one(g, f, g.gen(i)); };
  Vec xa = lm1(0), xb = lm1(1), xc = lm1(2), xd = lm1(3);
  std::vector<Vec> letters{
      vec_add(f, xa, xc),                  // (1+a)+(1+c)
      vec_add(f, xb, xd),                  // (1+b)+(1+d)
      vec_add(f, xb, vec_add(f, xc, xd)),  // (1+b)+(1+c)+(1+d)
      vec_add(f, xa, vec_add(f, xb, xc)),  // (1+a)+(1+b)+(1+c)
  };
  auto values = multiplicative_closure(g, f, letters);
  if (!values.empty()) {
    Filtration filt = radical_filtration(g, f);
    BasisCandidate cand;
    cand.source = "four-letter word closure for " + g.spec().name;
    cand.elements = std::move(values);
    if (verify_fm_basis(g, f, filt, cand).is_basis) return cand;
  }
  // Repair: free search over all leading matrices and bounded corrections.
  SearchConfig cfg;
  cfg.max_nodes = budget;
  cfg.deterministic = true;
  auto res = dfs_search(g, f, cfg);
  if (res.status == SearchStatus::Found) {
    res.candidate.source = "repair search for " + g.spec().name;
    return res.candidate;
  }
  fail("RepairFailed",
       "no word basis over the recipe letters verifies, and the repair search found no basis (" +
           res.note + ")");
}

BasisCandidate q8_basis(const Group& g, const Field& f, long long budget) {
  if (f.p() != 2)
    fail("CharacteristicMismatch", "|G| = 8 requires characteristic 2 for the radical chain");
  if (!has_primitive_cube_root(f))
    fail("NoCubeRoot", f.label() + " has no primitive cube root of unity");
  SearchConfig cfg;
  cfg.max_nodes = budget;
  cfg.deterministic = true;
  auto res = dfs_search(g, f, cfg);
  if (res.status == SearchStatus::Found) {
    res.candidate.source = "search-derived basis for Q8 over " + f.label();
    return res.candidate;
  }
  if (res.status == SearchStatus::BudgetExhausted)
    fail("SearchExhausted", "node budget exhausted before a basis was found");
  fail("SearchExhausted", "search space exhausted without a basis (" + res.note + ")");
}

BasisCandidate construct_for(const std::string& name, const Group& g, const Field& f,
                             long long budget) {
  // Product aliases keep their factor recipes.
  static const std::map<std::string, std::string> aliases = {
      {"G_18", "D32"},          {"G_22", "H_16 x C2"}, {"G_25", "D8 x C4"},
      {"G_26", "Q8 x C4"},      {"G_39", "D16 x C2"},  {"G_46", "D8 x C2 x C2"},
      {"G_47", "Q8 x C2 x C2"}, {"G_48", "D8YC4 x C2"}};
  std::string resolved = name;
  if (auto it = aliases.find(resolved); it != aliases.end()) resolved = it->second;

  if (resolved.find('x') != std::string::npos) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : resolved) {
      if (ch == 'x') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
    auto trimmed = [](const std::string& s) {
      size_t a = s.find_first_not_of(' ');
      size_t b = s.find_last_not_of(' ');
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    Group acc = group_from_spec(catalog_lookup(trimmed(parts[0])));
    BasisCandidate bacc = construct_for(trimmed(parts[0]), acc, f, budget);
    for (size_t i = 1; i < parts.size(); ++i) {
      Group gi = group_from_spec(catalog_lookup(trimmed(parts[i])));
      BasisCandidate bi = construct_for(trimmed(parts[i]), gi, f, budget);
      Group prod = direct_product(acc, gi);
      bacc = product_basis(prod, f, acc, bacc, gi, bi);
      acc = std::move(prod);
    }
    if (acc.order() != g.order()) fail("SizeMismatch", "product order mismatch for " + name);
    return bacc;
  }

  if (resolved == "D8" || resolved == "D16" || resolved == "D32") return dihedral_basis(g, f);
  if (resolved == "H_16" || resolved == "G_2" || resolved.rfind("T2", 0) == 0)
    return theorem2_basis(g, f);
  if (resolved == "G_49") return g49_basis(g, f, budget);
  if (resolved == "Q8") return q8_basis(g, f, budget);
  if (!resolved.empty() && resolved[0] == 'C') return abelian_basis(g, f);
  if (resolved == "D8YC4") {
    SearchConfig cfg;
    cfg.max_nodes = budget;
    cfg.deterministic = true;
    auto res = dfs_search(g, f, cfg);
    if (res.status == SearchStatus::Found) {
      res.candidate.source = "search-derived basis for D8YC4 over " + f.label();
      return res.candidate;
    }
    fail("SearchExhausted", "no basis found for D8YC4 (" + res.note + ")");
  }
  fail("UnknownLabel", "no construction is cataloged for '" + name + "'");
}

}  // namespace fmb
