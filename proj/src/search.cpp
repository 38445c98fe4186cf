#include "fmb/search.hpp"

#include <algorithm>
#include <unordered_set>

#include "fmb/error.hpp"
#include "fmb/obstruction.hpp"

namespace fmb {
namespace {

std::string key_of(const Vec& v) { return std::string(v.begin(), v.end()); }

struct SearchDriver {
  const Group& g;
  const Field& f;
  const Filtration& filt;
  const SearchConfig& cfg;
  int top_grade;  // corrections assigned for grades 2..top_grade
  std::vector<std::vector<Vec>> corr_reps;
  long long nodes = 0;
  SearchResult result;

  SearchDriver(const Group& g_, const Field& f_, const Filtration& filt_, const SearchConfig& c)
      : g(g_), f(f_), filt(filt_), cfg(c) {
    top_grade = cfg.exhaustive ? filt.s - 1 : std::min(1 + cfg.correction_depth, filt.s - 1);
    corr_reps.resize(std::max(2, top_grade + 1));
    for (int grade = 2; grade <= top_grade; ++grade) corr_reps[grade] = filt.layer_reps(grade);
  }

  void tick() {
    if (++nodes > cfg.max_nodes) fail("BudgetExhausted", "node budget exhausted");
  }

  // Closure plus full verification; the closure is forced, so the generators
  // determine the whole candidate.
  bool try_basis(const std::vector<Vec>& lifts) {
    auto values = multiplicative_closure(g, f, lifts);
    if (values.empty()) return false;
    BasisCandidate cand;
    cand.elements = std::move(values);
    cand.source = "depth-first search over " + g.spec().name + " / " + f.label();
    if (!verify_fm_basis(g, f, filt, cand).is_basis) return false;
    result.status = SearchStatus::Found;
    result.candidate = std::move(cand);
    return true;
  }

  bool descend(const std::vector<Vec>& base, int grade) {
    if (grade > top_grade) return try_basis(base);
    const auto& reps = corr_reps[grade];
    const int dim = static_cast<int>(reps.size());
    if (dim == 0) return descend(base, grade + 1);
    const int d1 = static_cast<int>(base.size());
    const int q = f.q();
    std::vector<Fel> digits(static_cast<size_t>(d1) * dim, 0);
    while (true) {
      tick();
      std::vector<Vec> lifted = base;
      for (int i = 0; i < d1; ++i)
        for (int r = 0; r < dim; ++r) {
          const Fel c = digits[i * dim + r];
          if (!c) continue;
          for (size_t t = 0; t < lifted[i].size(); ++t)
            lifted[i][t] = f.add(lifted[i][t], f.mul(c, reps[r][t]));
        }
      const int kmax = std::min(grade + 1, filt.s);
      WordClassTable table = word_classes(g, f, filt, lifted, kmax, kmax + 1);
      if (check_necessary(table, filt, kmax + 1, CheckMode::Concrete, kmax).pass &&
          descend(lifted, grade + 1))
        return true;
      int i = static_cast<int>(digits.size()) - 1;
      while (i >= 0 && ++digits[i] == q) digits[i--] = 0;
      if (i < 0) break;
    }
    return false;
  }

  bool try_matrix(const std::vector<Vec>& lifts) {
    tick();
    const int kprune = std::min(3, filt.s);
    WordClassTable table = word_classes(g, f, filt, lifts, kprune, kprune + 1);
    if (!check_necessary(table, filt, kprune + 1, CheckMode::LeadingOnly, kprune).pass)
      return false;
    return descend(lifts, 2);
  }
};

}  // namespace

std::vector<Vec> multiplicative_closure(const Group& g, const Field& f,
                                        const std::vector<Vec>& letters) {
  std::vector<Vec> values{vec_one(g.order())};
  std::unordered_set<std::string> seen{key_of(values[0])};
  for (const Vec& l : letters)
    if (!vec_is_zero(l) && seen.insert(key_of(l)).second) values.push_back(l);
  for (size_t i = 1; i < values.size(); ++i) {
    for (size_t j = 1; j < values.size(); ++j) {
      Vec prod = alg_mul(g, f, values[i], values[j]);
      if (vec_is_zero(prod)) continue;
      if (seen.insert(key_of(prod)).second) {
        values.push_back(std::move(prod));
        if (static_cast<int>(values.size()) > g.order()) return {};
      }
    }
  }
  if (static_cast<int>(values.size()) != g.order()) return {};
  return values;
}

SearchResult dfs_search(const Group& g, const Field& f, const SearchConfig& cfg) {
  if (cfg.max_nodes <= 0) fail("BadParams", "node budget must be positive");
  Filtration filt = radical_filtration(g, f);
  SearchDriver drv(g, f, filt, cfg);
  drv.result.complete = cfg.seed_letters.empty() && drv.top_grade >= filt.s - 1;

  try {
    if (!cfg.seed_letters.empty()) {
      for (const Vec& l : cfg.seed_letters)
        if (static_cast<int>(l.size()) != g.order())
          fail("BadParams", "seed letter length does not match the group order");
      drv.try_matrix(cfg.seed_letters);
    } else {
      const int d1 = filt.dim_layer(1);
      const auto layer1 = filt.layer_reps(1);
      enumerate_gl(f, d1, [&](const std::vector<Fel>& mat) {
        std::vector<Vec> lifts(d1, vec_zero(g.order()));
        for (int i = 0; i < d1; ++i)
          for (int j = 0; j < d1; ++j) {
            const Fel c = mat[i * d1 + j];
            if (!c) continue;
            for (int t = 0; t < g.order(); ++t)
              lifts[i][t] = f.add(lifts[i][t], f.mul(c, layer1[j][t]));
          }
        return !drv.try_matrix(lifts);  // stop on success
      });
    }
  } catch (const Error& e) {
    if (std::string(e.code()) != "BudgetExhausted") throw;
    drv.result.status = SearchStatus::BudgetExhausted;
    drv.result.complete = false;
    drv.result.note = "budget exhausted after " + std::to_string(drv.nodes) + " nodes";
  }
  drv.result.nodes = drv.nodes;
  if (drv.result.status == SearchStatus::NotFoundComplete) {
    drv.result.note = drv.result.complete
                          ? "exhausted the full configuration space"
                          : "exhausted configurations with corrections through grade " +
                                std::to_string(drv.top_grade);
  }
  return drv.result;
}

}  // namespace fmb
