#include "fmb/group.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include "fmb/error.hpp"

namespace fmb {

int GroupSpec::gen_index(const std::string& g) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == g) return static_cast<int>(i);
  fail("UnknownLabel", "no generator named '" + g + "' in " + name);
}

long long GroupSpec::declared_order() const {
  long long n = 1;
  for (int q : relorders) n *= q;
  return n;
}

namespace {

constexpr int kCollectBound = 1'000'000;

// Letter sequence form of a word (one entry per generator occurrence).
std::vector<int> letters_of(const Word& w) {
  std::vector<int> out;
  for (auto& [g, e] : w)
    for (int i = 0; i < e; ++i) out.push_back(g);
  return out;
}

// Collection from the left. Rewrites an arbitrary letter sequence to the
// normal form exponent vector, using
//   g_j g_i -> g_i g_j (g_j,g_i)      for j > i,
//   g^q     -> powerrel(g)            once a run reaches the relative order.
struct Collector {
  const GroupSpec& spec;
  std::vector<std::vector<int>> power_letters;
  std::vector<std::vector<std::vector<int>>> comm_letters;  // [j][i]

  explicit Collector(const GroupSpec& s) : spec(s) {
    const int n = static_cast<int>(s.relorders.size());
    power_letters.resize(n);
    for (int i = 0; i < n; ++i) power_letters[i] = letters_of(s.powerrels[i]);
    comm_letters.assign(n, std::vector<std::vector<int>>(n));
    for (auto& [ji, w] : s.commrels) comm_letters[ji.first][ji.second] = letters_of(w);
  }

  std::vector<int> collect(std::vector<int> w) const {
    int steps = 0;
    while (true) {
      if (++steps > kCollectBound)
        fail("InconsistentPresentation", "collection did not terminate for " + spec.name);
      // Power rewrites take priority over swaps; otherwise commutator words
      // that reuse earlier generators can outgrow the collapses.
      size_t pos = 0;
      int action = 0;  // 1 = swap at pos, 2 = power rewrite at pos
      for (size_t i = 0; i < w.size();) {
        size_t r = i;
        while (r < w.size() && w[r] == w[i]) ++r;
        if (static_cast<int>(r - i) >= spec.relorders[w[i]]) {
          action = 2;
          pos = i;
          break;
        }
        i = r;
      }
      if (action == 0) {
        for (size_t i = 0; i + 1 < w.size(); ++i) {
          if (w[i] > w[i + 1]) {
            action = 1;
            pos = i;
            break;
          }
        }
      }
      if (action == 0) break;
      if (action == 1) {
        const int g = w[pos], h = w[pos + 1];
        const auto& c = comm_letters[g][h];
        w[pos] = h;
        w[pos + 1] = g;
        if (!c.empty()) w.insert(w.begin() + pos + 2, c.begin(), c.end());
      } else {
        const int g = w[pos];
        const auto& pw = power_letters[g];
        w.erase(w.begin() + pos, w.begin() + pos + spec.relorders[g]);
        if (!pw.empty()) w.insert(w.begin() + pos, pw.begin(), pw.end());
      }
    }
    std::vector<int> exps(spec.relorders.size(), 0);
    for (int g : w) ++exps[g];
    return exps;
  }
};

void validate_spec(const GroupSpec& s) {
  const int n = static_cast<int>(s.relorders.size());
  if (n == 0 || s.gens.size() != s.relorders.size() || s.powerrels.size() != s.relorders.size())
    fail("InconsistentPresentation", "malformed presentation for " + s.name);
  for (int q : s.relorders)
    if (q < 2) fail("InconsistentPresentation", "relative orders must be >= 2");
  auto check_word = [&](const Word& w) {
    for (auto& [g, e] : w)
      if (g < 0 || g >= n || e < 1)
        fail("InconsistentPresentation", "bad word in presentation of " + s.name);
  };
  for (int i = 0; i < n; ++i) check_word(s.powerrels[i]);
  for (auto& [ji, w] : s.commrels) {
    auto [j, i] = ji;
    if (!(0 <= i && i < j && j < n))
      fail("InconsistentPresentation", "commutator pair out of range in " + s.name);
    check_word(w);
  }
}

// Positive-letter expansion of w^-1, using g^-1 = g^(q-1) * (powerword)^-1.
void inverse_letters(const GroupSpec& s, const Word& w, std::vector<int>& out, int depth) {
  if (depth > 16) fail("InconsistentPresentation", "inverse expansion recurses too deeply");
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    for (int t = 0; t < it->second; ++t) {
      const int g = it->first;
      for (int r = 0; r < s.relorders[g] - 1; ++r) out.push_back(g);
      inverse_letters(s, s.powerrels[g], out, depth + 1);
    }
  }
}

// Internal collection order: relation words may only reach generators that
// come later than the earlier member of their pair, which is what makes
// collection from the left terminate. Several catalog presentations need a
// reordered (and partly inverted) commutator table to satisfy this.
std::optional<std::vector<int>> find_conditioned_order(const GroupSpec& s) {
  const int n = static_cast<int>(s.relorders.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  do {
    std::vector<int> pos(n);
    for (int slot = 0; slot < n; ++slot) pos[order[slot]] = slot;
    bool ok = true;
    for (int g = 0; g < n && ok; ++g)
      for (auto& [l, e] : s.powerrels[g])
        if (pos[l] <= pos[g]) {
          ok = false;
          break;
        }
    for (auto it = s.commrels.begin(); ok && it != s.commrels.end(); ++it) {
      auto [j, i] = it->first;
      const int lo = pos[j] > pos[i] ? i : j;
      std::vector<int> letters;
      if (pos[j] > pos[i]) {
        for (auto& [l, e] : it->second) letters.push_back(l);
      } else {
        inverse_letters(s, it->second, letters, 0);
      }
      for (int l : letters)
        if (pos[l] <= pos[lo]) {
          ok = false;
          break;
        }
    }
    if (ok) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

// Presentation rewritten into the internal order, inverting commutator words
// whose required orientation is not the stored one.
GroupSpec reorder_spec(const GroupSpec& s, const std::vector<int>& order) {
  const int n = static_cast<int>(s.relorders.size());
  std::vector<int> pos(n);
  for (int slot = 0; slot < n; ++slot) pos[order[slot]] = slot;
  GroupSpec r;
  r.name = s.name + " [internal]";
  for (int slot = 0; slot < n; ++slot) {
    r.gens.push_back(s.gens[order[slot]]);
    r.relorders.push_back(s.relorders[order[slot]]);
  }
  auto remap = [&](const Word& w) {
    Word out;
    for (auto& [g, e] : w) out.emplace_back(pos[g], e);
    return out;
  };
  for (int slot = 0; slot < n; ++slot) r.powerrels.push_back(remap(s.powerrels[order[slot]]));
  for (auto& [ji, w] : s.commrels) {
    auto [j, i] = ji;
    if (pos[j] > pos[i]) {
      r.commrels[{pos[j], pos[i]}] = remap(w);
    } else {
      std::vector<int> letters;
      inverse_letters(s, w, letters, 0);
      Word out;
      for (int l : letters) out.emplace_back(pos[l], 1);
      if (!out.empty()) r.commrels[{pos[i], pos[j]}] = std::move(out);
    }
  }
  return r;
}

}  // namespace

std::vector<int> Group::exponents(Elt x) const {
  std::vector<int> e(spec_.relorders.size());
  for (int i = static_cast<int>(e.size()) - 1; i >= 0; --i) {
    e[i] = x % spec_.relorders[i];
    x = static_cast<Elt>(x / spec_.relorders[i]);
  }
  return e;
}

Elt Group::from_exponents(const std::vector<int>& e) const {
  long long idx = 0;
  for (size_t i = 0; i < e.size(); ++i) idx = idx * spec_.relorders[i] + e[i];
  return static_cast<Elt>(idx);
}

Elt Group::eval_word(const Word& w) const {
  Elt x = 0;
  for (auto& [g, e] : w)
    for (int i = 0; i < e; ++i) x = mul(x, gen_elt_[g]);
  return x;
}

Elt Group::pow(Elt x, long long e) const {
  Elt r = 0;
  for (long long i = 0; i < e; ++i) r = mul(r, x);
  return r;
}

int Group::order_of(Elt x) const {
  int o = 1;
  Elt y = x;
  while (y != 0) {
    y = mul(y, x);
    ++o;
  }
  return o;
}

std::string Group::describe(Elt x) const {
  if (x == 0) return "1";
  auto e = exponents(x);
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += spec_.gens[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

namespace {

std::vector<int> letters_of_index(const GroupSpec& spec, Elt x) {
  const int ng = static_cast<int>(spec.relorders.size());
  std::vector<int> w;
  Elt v = x;
  for (int i = ng - 1; i >= 0; --i) {
    int e = v % spec.relorders[i];
    v = static_cast<Elt>(v / spec.relorders[i]);
    for (int t = 0; t < e; ++t) w.push_back(i);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

void check_axioms(const Group& g) {
  const int n = g.order();
  std::vector<char> seen(n);
  for (Elt x = 0; x < n; ++x) {
    if (g.mul(0, x) != x || g.mul(x, 0) != x) fail("OrderMismatch", "identity fails");
    std::fill(seen.begin(), seen.end(), 0);
    for (Elt y = 0; y < n; ++y) seen[g.mul(x, y)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      fail("OrderMismatch", "multiplication is not a bijection for " + g.spec().name);
  }
  if (n <= 64) {
    for (Elt x = 0; x < n; ++x)
      for (Elt y = 0; y < n; ++y)
        for (Elt z = 0; z < n; ++z)
          if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
            fail("OrderMismatch", "associativity fails for " + g.spec().name);
  } else {
    std::mt19937 rng(12345);
    for (int t = 0; t < 20000; ++t) {
      Elt x = static_cast<Elt>(rng() % n), y = static_cast<Elt>(rng() % n),
          z = static_cast<Elt>(rng() % n);
      if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
        fail("OrderMismatch", "associativity fails for " + g.spec().name);
    }
  }
}

void check_relations(const Group& g) {
  const GroupSpec& spec = g.spec();
  for (int i = 0; i < g.ngens(); ++i) {
    if (g.pow(g.gen(i), spec.relorders[i]) != g.eval_word(spec.powerrels[i]))
      fail("RelationViolation", "power relation fails for generator " + spec.gens[i]);
  }
  for (auto& [ji, w] : spec.commrels) {
    if (commutator(g, g.gen(ji.first), g.gen(ji.second)) != g.eval_word(w))
      fail("RelationViolation", "commutator relation fails in " + spec.name);
  }
}

}  // namespace

Group group_from_spec(const GroupSpec& spec) {
  validate_spec(spec);
  const long long n_ll = spec.declared_order();
  if (n_ll > 65535) fail("OrderOverflow", spec.name + " exceeds supported order");
  const int n = static_cast<int>(n_ll);
  const int ng = static_cast<int>(spec.relorders.size());

  // When the given order is not collectable, build in a conditioned internal
  // order and relabel the table back to this presentation's element order.
  auto ord = find_conditioned_order(spec);
  const bool reorder = ord.has_value() && !std::is_sorted(ord->begin(), ord->end());
  if (reorder) {
    Group internal = group_from_spec(reorder_spec(spec, *ord));
    std::vector<int> pos(ng);
    for (int slot = 0; slot < ng; ++slot) pos[(*ord)[slot]] = slot;

    Group g;
    g.spec_ = spec;
    g.n_ = n;
    g.radix_.assign(ng, 1);
    for (int i = ng - 2; i >= 0; --i) g.radix_[i] = g.radix_[i + 1] * spec.relorders[i + 1];
    g.gen_elt_.resize(ng);
    for (int i = 0; i < ng; ++i) g.gen_elt_[i] = static_cast<Elt>(g.radix_[i]);

    std::vector<Elt> iota(n);
    std::vector<int> seen(n, -1);
    for (Elt x = 0; x < n; ++x) {
      Elt e = 0;
      for (int l : letters_of_index(spec, x)) e = internal.mul(e, internal.gen(pos[l]));
      iota[x] = e;
      if (seen[e] >= 0)
        fail("OrderMismatch", "normal forms collapse; enumerated order below declared for " +
                                  spec.name);
      seen[e] = x;
    }
    g.cayley_.assign(static_cast<size_t>(n) * n, 0);
    g.inv_.resize(n);
    for (Elt x = 0; x < n; ++x) {
      for (Elt y = 0; y < n; ++y)
        g.cayley_[static_cast<size_t>(x) * n + y] =
            static_cast<Elt>(seen[internal.mul(iota[x], iota[y])]);
      g.inv_[x] = static_cast<Elt>(seen[internal.inverse(iota[x])]);
    }
    check_axioms(g);
    check_relations(g);
    return g;
  }

  Group g;
  g.spec_ = spec;
  g.n_ = n;
  g.radix_.assign(ng, 1);
  for (int i = ng - 2; i >= 0; --i) g.radix_[i] = g.radix_[i + 1] * spec.relorders[i + 1];
  g.gen_elt_.resize(ng);
  for (int i = 0; i < ng; ++i) g.gen_elt_[i] = static_cast<Elt>(g.radix_[i]);

  Collector col(spec);
  auto index_of = [&](const std::vector<int>& exps) {
    long long idx = 0;
    for (int i = 0; i < ng; ++i) {
      if (exps[i] >= spec.relorders[i])
        fail("InconsistentPresentation", "collection left an oversized exponent");
      idx = idx * spec.relorders[i] + exps[i];
    }
    return static_cast<Elt>(idx);
  };
  // Normal forms must be their own collection result.
  for (Elt x = 0; x < n; ++x)
    if (index_of(col.collect(letters_of_index(spec, x))) != x)
      fail("OrderMismatch", "normal forms collapse; enumerated order below declared for " +
                                spec.name);

  // Columns g -> g * gen_i, then the full table one suffix generator at a time.
  std::vector<std::vector<Elt>> gencol(ng, std::vector<Elt>(n));
  for (int i = 0; i < ng; ++i)
    for (Elt x = 0; x < n; ++x) {
      auto w = letters_of_index(spec, x);
      w.push_back(i);
      gencol[i][x] = index_of(col.collect(std::move(w)));
    }

  g.cayley_.assign(static_cast<size_t>(n) * n, 0);
  for (Elt x = 0; x < n; ++x) {
    g.cayley_[static_cast<size_t>(x) * n + 0] = x;
    for (Elt y = 1; y < n; ++y) {
      // Last nonzero exponent position of y gives y = y_prev * gen_j.
      Elt v = y;
      int j = ng - 1;
      Elt prev = 0;
      for (int i = ng - 1; i >= 0; --i) {
        int e = v % spec.relorders[i];
        v = static_cast<Elt>(v / spec.relorders[i]);
        if (e != 0) {
          j = i;
          prev = static_cast<Elt>(y - g.radix_[i]);
          break;
        }
      }
      g.cayley_[static_cast<size_t>(x) * n + y] =
          gencol[j][g.cayley_[static_cast<size_t>(x) * n + prev]];
    }
  }

  g.inv_.resize(n);
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      if (g.mul(x, y) == 0) {
        g.inv_[x] = y;
        break;
      }

  check_axioms(g);
  check_relations(g);
  return g;
}

GroupSpec direct_product_spec(const GroupSpec& a, const GroupSpec& b) {
  GroupSpec s;
  s.name = a.name + " x " + b.name;
  s.gens = a.gens;
  auto used = [&](const std::string& nm) {
    return std::find(s.gens.begin(), s.gens.end(), nm) != s.gens.end();
  };
  for (auto& gname : b.gens) {
    std::string nm = gname;
    int suffix = 2;
    while (used(nm)) nm = gname + std::to_string(suffix++);
    s.gens.push_back(nm);
  }
  s.relorders = a.relorders;
  s.relorders.insert(s.relorders.end(), b.relorders.begin(), b.relorders.end());
  const int off = static_cast<int>(a.relorders.size());
  s.powerrels = a.powerrels;
  for (auto w : b.powerrels) {
    for (auto& [g, e] : w) g += off;
    s.powerrels.push_back(std::move(w));
  }
  s.commrels = a.commrels;
  for (auto [ji, w] : b.commrels) {
    for (auto& [g, e] : w) g += off;
    s.commrels[{ji.first + off, ji.second + off}] = std::move(w);
  }
  return s;
}

Group direct_product(const Group& a, const Group& b, int max_order) {
  const long long n = static_cast<long long>(a.order()) * b.order();
  if (n > max_order)
    fail("OrderOverflow", "product order " + std::to_string(n) + " exceeds the configured maximum");
  return group_from_spec(direct_product_spec(a.spec(), b.spec()));
}

Elt commutator(const Group& g, Elt x, Elt y) {
  return g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y));
}

std::vector<Elt> subgroup_generated(const Group& g, const std::vector<Elt>& seeds) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elt> members{0};
  in[0] = 1;
  std::vector<Elt> queue{0};
  auto push = [&](Elt x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      queue.push_back(x);
    }
  };
  for (Elt s : seeds) push(s);
  for (size_t t = 0; t < queue.size(); ++t) {
    Elt x = queue[t];
    push(g.inverse(x));
    for (size_t u = 0; u < members.size(); ++u) {
      push(g.mul(x, members[u]));
      push(g.mul(members[u], x));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

SubgroupChain lazard_series(const Group& g, int p) {
  if (group_prime(g) != p) fail("NotPGroup", "group order is not a power of " + std::to_string(p));
  SubgroupChain chain;
  std::vector<Elt> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  chain.terms.push_back(all);
  while (chain.terms.back().size() > 1) {
    const int i = static_cast<int>(chain.terms.size()) + 1;  // computing M_i
    const auto& prev = chain.terms.back();
    const auto& mid = chain.terms[(i + p - 1) / p - 1];  // M_ceil(i/p)
    std::vector<Elt> seeds;
    for (Elt u : prev)
      for (Elt v = 0; v < g.order(); ++v) seeds.push_back(commutator(g, u, v));
    for (Elt u : mid) seeds.push_back(g.pow(u, p));
    chain.terms.push_back(subgroup_generated(g, seeds));
  }
  return chain;
}

bool is_powerful(const Group& g, int p) {
  if (group_prime(g) != p) fail("NotPGroup", "group order is not a power of " + std::to_string(p));
  const int e = (p == 2) ? 4 : p;
  std::vector<Elt> seeds;
  for (Elt x = 0; x < g.order(); ++x) seeds.push_back(g.pow(x, e));
  auto ge = subgroup_generated(g, seeds);
  std::vector<char> in(g.order(), 0);
  for (Elt x : ge) in[x] = 1;
  for (Elt x = 0; x < g.order(); ++x)
    for (Elt y = 0; y < g.order(); ++y)
      if (!in[commutator(g, x, y)]) return false;
  return true;
}

int group_prime(const Group& g) {
  int n = g.order();
  for (int p = 2; p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1 ? p : 0;
    }
  }
  return 0;
}

}  // namespace fmb
