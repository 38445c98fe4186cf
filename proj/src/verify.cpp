#include "fmb/verify.hpp"

#include <algorithm>
#include <unordered_map>

#include "fmb/error.hpp"

namespace fmb {
namespace {

std::string key_of(const Vec& v) { return std::string(v.begin(), v.end()); }

}  // namespace

VerifyReport verify_fm_basis(const Group& g, const Field& f, const Filtration& filt,
                             const BasisCandidate& cand) {
  const int n = g.order();
  if (static_cast<int>(cand.elements.size()) != n)
    fail("SizeMismatch", "candidate has " + std::to_string(cand.elements.size()) +
                             " elements for a group of order " + std::to_string(n));
  for (const Vec& v : cand.elements)
    if (static_cast<int>(v.size()) != n)
      fail("SizeMismatch", "candidate element length differs from the group order");

  VerifyReport rep;

  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index.emplace(key_of(cand.elements[i]), i);
  const bool distinct = static_cast<int>(index.size()) == n;
  const bool has_one = cand.elements[0] == vec_one(n);
  rep.shape_ok = distinct && has_one;
  if (!has_one) rep.detail += "first element is not the identity\n";
  if (!distinct) rep.detail += "candidate elements are not pairwise distinct\n";

  {
    Subspace span(f, n);
    for (const Vec& v : cand.elements) span.insert(v);
    rep.rank_ok = span.dim() == n;
    if (!rep.rank_ok) rep.detail += "rank " + std::to_string(span.dim()) + " < |G|\n";
  }

  // Exact closure on ordered pairs, identity included.
  const Vec zero = vec_zero(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec prod = alg_mul(g, f, cand.elements[i], cand.elements[j]);
      if (vec_is_zero(prod)) continue;
      if (!index.count(key_of(prod))) rep.closure_failures.emplace_back(i, j);
    }
  }
  std::sort(rep.closure_failures.begin(), rep.closure_failures.end());

  rep.grades.resize(n);
  for (int i = 0; i < n; ++i) rep.grades[i] = filt.grade(cand.elements[i]);

  // B cap A must be everything except the identity element.
  rep.radical_ok = true;
  int aug_nonzero = 0;
  for (int i = 0; i < n; ++i)
    if (rep.grades[i] == 0) ++aug_nonzero;
  if (aug_nonzero != 1 || rep.grades[0] != 0) {
    rep.radical_ok = false;
    rep.detail += "B minus {1} does not lie in the augmentation ideal\n";
  }

  // Property (I): per layer, counts match and classes stay independent.
  rep.property2_ok = true;
  for (int t = 1; t <= filt.s; ++t) {
    int count = 0;
    Subspace layer_span(f, n);
    bool indep = true;
    std::unordered_map<std::string, int> classes;
    for (int i = 0; i < n; ++i) {
      if (rep.grades[i] != t) continue;
      ++count;
      Vec cls = filt.class_at(cand.elements[i], t);
      if (!layer_span.insert(cls)) indep = false;
      auto [it, fresh] = classes.emplace(key_of(cls), i);
      if (!fresh) rep.property2_ok = false;
    }
    const bool ok = (count == filt.dim_layer(t)) && indep;
    rep.radical_layer_ok[t] = ok;
    if (!ok)
      rep.detail += "layer " + std::to_string(t) + ": " + std::to_string(count) +
                    " elements for dimension " + std::to_string(filt.dim_layer(t)) + "\n";
  }
  // No candidate element may vanish or sit below the last layer improperly.
  for (int i = 1; i < n; ++i)
    if (rep.grades[i] == kGradeInfinity) {
      rep.radical_ok = false;
      rep.detail += "candidate contains the zero vector\n";
    }

  bool layers_ok = std::all_of(rep.radical_layer_ok.begin(), rep.radical_layer_ok.end(),
                               [](auto& kv) { return kv.second; });
  rep.is_basis = rep.shape_ok && rep.rank_ok && rep.closure_failures.empty() && rep.radical_ok &&
                 layers_ok && rep.property2_ok;
  return rep;
}

std::map<int, int> basis_grading(const Filtration& filt, const BasisCandidate& cand) {
  std::map<int, int> hist;
  for (const Vec& v : cand.elements) ++hist[filt.grade(v)];
  return hist;
}

std::string VerifyReport::summary() const {
  std::string out;
  out += std::string("rank: ") + (rank_ok ? "ok" : "FAIL") + "\n";
  out += std::string("closure: ") +
         (closure_failures.empty() ? "ok" : std::to_string(closure_failures.size()) + " failures") +
         "\n";
  out += std::string("radical: ") + (radical_ok ? "ok" : "FAIL") + "\n";
  for (auto& [t, ok] : radical_layer_ok)
    out += "layer " + std::to_string(t) + ": " + (ok ? "ok" : "FAIL") + "\n";
  out += std::string("verdict: ") + (is_basis ? "filtered multiplicative basis" : "rejected") + "\n";
  if (!detail.empty()) out += detail;
  return out;
}

}  // namespace fmb
