#include "fmb/obstruction.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "fmb/error.hpp"

namespace fmb {
namespace {

std::string key_of(const Vec& v) { return std::string(v.begin(), v.end()); }

}  // namespace

int WordClassTable::len_of(long long id) const {
  int l = 1;
  while (id >= off[l]) ++l;
  return l;
}

long long WordClassTable::prefix_of(long long id) const {
  const int l = len_of(id);
  if (l == 1) return -1;
  const long long digits = id - off[l - 1];
  return off[l - 2] + digits / d1;
}

int WordClassTable::last_letter(long long id) const {
  const int l = len_of(id);
  return static_cast<int>((id - off[l - 1]) % d1);
}

long long WordClassTable::append(long long id, int letter) const {
  const int l = len_of(id);
  if (l + 1 > L) return -1;
  return off[l] + (id - off[l - 1]) * d1 + letter;
}

std::string WordClassTable::word_name(long long id) const {
  const int l = len_of(id);
  long long digits = id - off[l - 1];
  std::vector<int> letters(l);
  for (int i = l - 1; i >= 0; --i) {
    letters[i] = static_cast<int>(digits % d1);
    digits /= d1;
  }
  std::string out;
  for (int x : letters) out += "b" + std::to_string(x + 1);
  return out;
}

WordClassTable word_classes(const Group& g, const Field& f, const Filtration& filt,
                            const std::vector<Vec>& lifts, int L, int m) {
  if (m == 0) m = L + 1;
  m = std::min(m, filt.s + 1);
  L = std::min(L, std::max(1, m - 1));
  WordClassTable t;
  t.d1 = static_cast<int>(lifts.size());
  t.L = L;
  t.m = m;
  {
    Subspace span(f, g.order());
    for (const Vec& l : lifts) {
      if (filt.grade(l) != 1) fail("DependentLeadingTerms", "lift is not a grade-1 element");
      if (!span.insert(filt.class_at(l, 1)))
        fail("DependentLeadingTerms", "grade-1 classes of the lifts are dependent");
    }
  }
  t.off.assign(L + 1, 0);
  long long count = 1;
  for (int l = 1; l <= L; ++l) {
    count *= t.d1;
    t.off[l] = t.off[l - 1] + count;
  }
  const Quotient q(filt, m);
  t.values.resize(t.off[L]);
  t.grades.resize(t.off[L]);
  t.length_class.resize(t.off[L]);
  for (long long id = 0; id < t.off[L]; ++id) {
    const int l = t.len_of(id);
    if (l == 1) {
      t.values[id] = q.reduce(lifts[id]);
    } else {
      t.values[id] = q.mul(t.values[t.prefix_of(id)], lifts[t.last_letter(id)]);
    }
    // A length-l word sits in A^l already; scan upward from there.
    int grade = l;
    if (vec_is_zero(t.values[id])) {
      grade = m;
    } else {
      while (grade < m && filt.power(std::min(grade + 1, filt.s + 1)).contains(t.values[id]))
        ++grade;
    }
    t.grades[id] = grade;
    t.length_class[id] = l < m ? filt.class_at(t.values[id], l) : vec_zero(g.order());
  }
  return t;
}

namespace {

struct UnionFind {
  std::vector<long long> parent;
  explicit UnionFind(long long n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  long long find(long long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(long long a, long long b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

CheckOutcome violation(int grade, std::string kind, std::string detail) {
  CheckOutcome out;
  out.pass = false;
  out.grade = grade;
  out.kind = std::move(kind);
  out.detail = std::move(detail);
  return out;
}

// Correction-free necessary conditions: the grade-|w| class of a word does
// not depend on correction terms, so these run on the leading matrix alone.
CheckOutcome check_leading(const WordClassTable& t, const Filtration& filt, int kmax) {
  const Field& f = filt.field;
  CheckOutcome out;
  for (int k = 2; k <= std::min(kmax, t.L); ++k) {
    Subspace span(f, static_cast<int>(t.values[0].size()));
    std::unordered_map<std::string, long long> classes;
    for (long long id = t.off[k - 1]; id < t.off[k]; ++id) {
      const Vec& c = t.length_class[id];
      if (vec_is_zero(c)) continue;
      auto [it, fresh] = classes.emplace(key_of(c), id);
      if (!fresh) continue;
      if (!span.insert(c))
        return violation(k, "N1-rank",
                         "grade-" + std::to_string(k) + " classes of length-" + std::to_string(k) +
                             " words are dependent");
    }
    if (span.dim() != filt.dim_layer(k))
      return violation(k, "N1-count",
                       std::to_string(span.dim()) + " independent classes at grade " +
                           std::to_string(k) + ", dimension is " +
                           std::to_string(filt.dim_layer(k)));
  }
  // Words sharing a nonzero class are the same basis element; extensions of
  // equal words are equal again, and their leading classes must agree.
  UnionFind uf(t.off[t.L]);
  std::vector<std::pair<long long, long long>> work;
  for (int k = 2; k <= std::min(kmax, t.L); ++k) {
    std::unordered_map<std::string, long long> first;
    for (long long id = t.off[k - 1]; id < t.off[k]; ++id) {
      const Vec& c = t.length_class[id];
      if (vec_is_zero(c)) continue;
      auto [it, fresh] = first.emplace(key_of(c), id);
      if (!fresh) work.emplace_back(it->second, id);
    }
  }
  size_t head = 0;
  while (head < work.size()) {
    auto [a, b] = work[head++];
    if (!uf.unite(a, b)) continue;
    out.forced.emplace_back(a, b);
    if (t.length_class[a] != t.length_class[b])
      return violation(t.len_of(a), "N2",
                       t.word_name(a) + " and " + t.word_name(b) +
                           " are forced equal but their leading classes differ");
    const int la = t.len_of(a);
    if (la + 1 <= t.L) {
      long long pow = 1;
      for (int i = 0; i < la; ++i) pow *= t.d1;
      const long long da = a - t.off[la - 1], db = b - t.off[la - 1];
      for (int x = 0; x < t.d1; ++x) {
        work.emplace_back(t.append(a, x), t.append(b, x));
        work.emplace_back(t.off[la] + x * pow + da, t.off[la] + x * pow + db);
      }
    }
  }
  return out;
}

// Conditions on a configuration whose corrections below grade kmax are fixed.
CheckOutcome check_concrete(const WordClassTable& t, const Filtration& filt, int m, int kmax) {
  const Field& f = filt.field;
  CheckOutcome out = check_leading(t, filt, kmax);
  if (!out.pass) return out;
  const int cap = std::min({kmax, m - 1, t.L});
  const Subspace& eqmod = filt.power(std::min(kmax + 1, m));
  for (int k = 2; k <= cap; ++k) {
    std::unordered_map<std::string, long long> classes;
    for (long long id = t.off[k - 1]; id < t.off[k]; ++id) {
      const Vec& c = t.length_class[id];
      if (!vec_is_zero(c)) classes.emplace(key_of(c), id);
    }
    // Every word of grade exactly k is a layer-k basis element: its class
    // must come from the length-k span, and words sharing a class must agree
    // in the quotient.
    std::unordered_map<std::string, long long> by_class;
    for (long long id = 0; id < t.off[std::min(k, t.L)]; ++id) {
      if (t.grades[id] != k) continue;
      Vec c = filt.class_at(t.values[id], k);
      const std::string key = key_of(c);
      if (!classes.count(key))
        return violation(k, "coverage",
                         t.word_name(id) + " has a grade-" + std::to_string(k) +
                             " class outside the length-" + std::to_string(k) + " span");
      auto [it, fresh] = by_class.emplace(key, id);
      if (fresh) continue;
      const Vec diff = vec_sub(f, t.values[id], t.values[it->second]);
      if (!eqmod.contains(diff))
        return violation(k, "N2",
                         t.word_name(id) + " and " + t.word_name(it->second) +
                             " share a class but differ in the quotient");
    }
  }
  return out;
}

}  // namespace

CheckOutcome check_necessary(const WordClassTable& table, const Filtration& filt, int m,
                             CheckMode mode, int kmax) {
  if (kmax == 0) kmax = m - 1;
  return mode == CheckMode::LeadingOnly ? check_leading(table, filt, kmax)
                                        : check_concrete(table, filt, m, kmax);
}

void enumerate_gl(const Field& f, int d, const std::function<bool(const std::vector<Fel>&)>& cb) {
  const int q = f.q();
  long long rows = 1;
  for (int i = 0; i < d; ++i) rows *= q;
  std::vector<Fel> mat(d * d, 0);
  std::vector<Vec> row_vecs(d, Vec(d));

  // Depth-first over rows; a row is admitted when independent of the chosen
  // prefix, which keeps the enumeration proportional to |GL|.
  std::function<bool(int, const Subspace&)> rec = [&](int r, const Subspace& span) -> bool {
    if (r == d) return cb(mat);
    for (long long code = 1; code < rows; ++code) {
      long long v = code;
      for (int j = d - 1; j >= 0; --j) {
        row_vecs[r][j] = static_cast<Fel>(v % q);
        v /= q;
      }
      Subspace next = span;
      if (!next.insert(row_vecs[r])) continue;
      for (int j = 0; j < d; ++j) mat[r * d + j] = row_vecs[r][j];
      if (!rec(r + 1, next)) return false;
    }
    return true;
  };
  Subspace empty(f, d);
  rec(0, empty);
}

namespace {

struct ObstructContext {
  const Group* g;
  const Field* f;
  const Filtration* filt;
  int m;
  std::vector<Vec> layer1;                  // canonical grade-1 representatives
  std::vector<std::vector<Vec>> corr_reps;  // corr_reps[grade] for grades >= 2
  std::atomic<long long> nodes{0};
  long long budget;
};

std::vector<Vec> lifts_from_matrix(const ObstructContext& ctx, const std::vector<Fel>& mat) {
  const int d1 = static_cast<int>(ctx.layer1.size());
  const int n = ctx.g->order();
  std::vector<Vec> lifts(d1, vec_zero(n));
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j) {
      const Fel c = mat[i * d1 + j];
      if (!c) continue;
      for (int t = 0; t < n; ++t)
        lifts[i][t] = ctx.f->add(lifts[i][t], ctx.f->mul(c, ctx.layer1[j][t]));
    }
  return lifts;
}

// Depth-first correction assignment over grades 2..m-2; each level is pruned
// with the conditions already determined at that depth. Returns true when
// some assignment passes every check.
bool corrections_survive(ObstructContext& ctx, const std::vector<Vec>& base, int grade) {
  const int d1 = static_cast<int>(base.size());
  if (grade > ctx.m - 2) return true;
  const auto& reps = ctx.corr_reps[grade];
  const int dim = static_cast<int>(reps.size());
  const int q = ctx.f->q();
  if (dim == 0) return corrections_survive(ctx, base, grade + 1);

  const long long total_digits = static_cast<long long>(d1) * dim;
  std::vector<Fel> digits(total_digits, 0);
  while (true) {
    if (++ctx.nodes > ctx.budget) fail("BudgetExhausted", "configuration budget exhausted");
    std::vector<Vec> lifted = base;
    for (int i = 0; i < d1; ++i)
      for (int r = 0; r < dim; ++r) {
        const Fel c = digits[i * dim + r];
        if (!c) continue;
        for (size_t t = 0; t < lifted[i].size(); ++t)
          lifted[i][t] = ctx.f->add(lifted[i][t], ctx.f->mul(c, reps[r][t]));
      }
    const int kmax = std::min(grade + 1, ctx.m - 1);
    WordClassTable t = word_classes(*ctx.g, *ctx.f, *ctx.filt, lifted, kmax, ctx.m);
    if (check_concrete(t, *ctx.filt, ctx.m, kmax).pass &&
        corrections_survive(ctx, lifted, grade + 1))
      return true;
    int i = static_cast<int>(total_digits) - 1;
    while (i >= 0 && ++digits[i] == q) digits[i--] = 0;
    if (i < 0) break;
  }
  return false;
}

}  // namespace

std::string ObstructionReport::render() const {
  std::string out;
  out += "group " + group_name + "\n";
  out += "field " + field_label + "\n";
  out += "truncation " + std::to_string(m) + "\n";
  out += "matrices " + std::to_string(matrices) + "\n";
  out += "nodes " + std::to_string(nodes) + " of budget " + std::to_string(budget) + "\n";
  std::map<std::pair<int, std::string>, long long> tally;
  for (const auto& v : verdicts)
    if (!v.survived) ++tally[{v.eliminated_at, v.kind}];
  for (auto& [key, count] : tally)
    out += "eliminated at grade " + std::to_string(key.first) + " (" + key.second +
           "): " + std::to_string(count) + "\n";
  long long listed = 0;
  for (const auto& v : verdicts) {
    if (!v.survived) continue;
    if (++listed > 25) {
      out += "...\n";
      break;
    }
    out += "survivor matrix #" + std::to_string(v.index) + v.note + "\n";
  }
  out += "survivors " + std::to_string(survivors) + "\n";
  switch (status) {
    case ObstructStatus::Certified:
      out += "verdict NonExistenceCertified\n";
      break;
    case ObstructStatus::Inconclusive:
      out += "verdict Inconclusive\n";
      break;
    case ObstructStatus::BudgetExhausted:
      out += "verdict BudgetExhausted\n";
      break;
  }
  return out;
}

ObstructionReport obstruct(const Group& g, const Field& f, int m, long long budget, int jobs) {
  Filtration filt = radical_filtration(g, f);
  const int m_eff = std::min(m, filt.s + 1);
  const int d1 = filt.dim_layer(1);
  if (d1 > 4) fail("BadParams", "leading-matrix enumeration supports at most 4 generators");

  ObstructContext ctx;
  ctx.g = &g;
  ctx.f = &f;
  ctx.filt = &filt;
  ctx.m = m_eff;
  ctx.layer1 = filt.layer_reps(1);
  ctx.corr_reps.resize(std::max(2, m_eff - 1));
  for (int grade = 2; grade <= m_eff - 2; ++grade) ctx.corr_reps[grade] = filt.layer_reps(grade);
  ctx.budget = budget;

  ObstructionReport rep;
  rep.group_name = g.spec().name;
  rep.field_label = f.label();
  rep.m = m_eff;
  rep.d1 = d1;
  rep.budget = budget;

  // Flat matrix buffer, capped by the budget: every matrix costs at least one
  // configuration, so an overflowing enumeration is already an exhausted run.
  std::vector<Fel> mats;
  const size_t stride = static_cast<size_t>(d1) * d1;
  bool too_many = false;
  enumerate_gl(f, d1, [&](const std::vector<Fel>& mat) {
    if (static_cast<long long>(mats.size() / stride) >= budget) {
      too_many = true;
      return false;
    }
    mats.insert(mats.end(), mat.begin(), mat.end());
    return true;
  });
  if (too_many) {
    rep.matrices = budget;
    rep.nodes = budget;
    rep.status = ObstructStatus::BudgetExhausted;
    return rep;
  }
  const size_t nmats = mats.size() / stride;
  rep.matrices = static_cast<long long>(nmats);
  rep.verdicts.resize(nmats);

  std::atomic<size_t> next{0};
  std::atomic<bool> exhausted{false};
  auto worker = [&]() {
    while (true) {
      const size_t idx = next.fetch_add(1);
      if (idx >= nmats || exhausted.load()) return;
      MatrixVerdict v;
      v.index = static_cast<long long>(idx);
      try {
        if (++ctx.nodes > ctx.budget) fail("BudgetExhausted", "configuration budget exhausted");
        std::vector<Fel> mat(mats.begin() + idx * stride, mats.begin() + (idx + 1) * stride);
        std::vector<Vec> lifts = lifts_from_matrix(ctx, mat);
        WordClassTable table = word_classes(g, f, filt, lifts, m_eff - 1, m_eff);
        CheckOutcome lead = check_leading(table, filt, m_eff - 1);
        if (!lead.pass) {
          v.eliminated_at = lead.grade;
          v.kind = lead.kind;
        } else if (corrections_survive(ctx, lifts, 2)) {
          v.survived = true;
          for (auto& [a, b] : lead.forced)
            v.note += " " + table.word_name(a) + "=" + table.word_name(b);
        } else {
          v.eliminated_at = m_eff - 1;
          v.kind = "corrections";
        }
      } catch (const Error& e) {
        if (std::string(e.code()) == "BudgetExhausted") {
          exhausted.store(true);
          return;
        }
        throw;
      }
      rep.verdicts[idx] = std::move(v);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  rep.nodes = ctx.nodes.load();
  if (exhausted.load()) {
    rep.status = ObstructStatus::BudgetExhausted;
    return rep;
  }
  for (const auto& v : rep.verdicts)
    if (v.survived) ++rep.survivors;
  rep.status = rep.survivors == 0 ? ObstructStatus::Certified : ObstructStatus::Inconclusive;
  return rep;
}

}  // namespace fmb
