#include "fmb/algebra.hpp"

#include <algorithm>

#include "fmb/error.hpp"

namespace fmb {

Vec vec_zero(int n) { return Vec(n, 0); }

Vec vec_one(int n) {
  Vec v(n, 0);
  v[0] = 1;
  return v;
}

Vec elem_minus_one(const Group& g, const Field& f, Elt x) {
  Vec v(g.order(), 0);
  if (x == 0) return v;
  v[x] = 1;
  v[0] = f.neg(1);
  return v;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Fel c) { return c == 0; });
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = f.add(a[i], b[i]);
  return c;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = f.sub(a[i], b[i]);
  return c;
}

Vec vec_scale(const Field& f, Fel c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

Vec alg_mul(const Group& g, const Field& f, const Vec& x, const Vec& y) {
  const int n = g.order();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    fail("DimensionMismatch", "algebra element length does not match the group order");
  Vec z(n, 0);
  for (int u = 0; u < n; ++u) {
    if (x[u] == 0) continue;
    const Fel cu = x[u];
    for (int v = 0; v < n; ++v) {
      if (y[v] == 0) continue;
      const Elt w = g.mul(static_cast<Elt>(u), static_cast<Elt>(v));
      z[w] = f.add(z[w], f.mul(cu, y[v]));
    }
  }
  return z;
}

Vec translate(const Group& g, const Vec& x, Elt by) {
  Vec z(x.size(), 0);
  for (size_t u = 0; u < x.size(); ++u)
    if (x[u]) z[g.mul(static_cast<Elt>(u), by)] = x[u];
  return z;
}

Fel augmentation(const Field& f, const Vec& x) {
  Fel s = 0;
  for (Fel c : x) s = f.add(s, c);
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  Vec r = v;
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Fel c = r[pivots_[i]];
    if (c == 0) continue;
    const Vec& row = rows_[i];
    for (int j = pivots_[i]; j < n_; ++j)
      if (row[j]) r[j] = f_->sub(r[j], f_->mul(c, row[j]));
  }
  return r;
}

bool Subspace::insert(const Vec& v) {
  Vec r = reduce(v);
  int p = -1;
  for (int j = 0; j < n_; ++j)
    if (r[j]) {
      p = j;
      break;
    }
  if (p < 0) return false;
  const Fel scale = f_->inv(r[p]);
  for (int j = p; j < n_; ++j) r[j] = f_->mul(scale, r[j]);
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Fel c = rows_[i][p];
    if (c == 0) continue;
    for (int j = p; j < n_; ++j)
      if (r[j]) rows_[i][j] = f_->sub(rows_[i][j], f_->mul(c, r[j]));
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  rows_.insert(rows_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

Vec reduce_mod(const Subspace& sub, const Vec& x) {
  if (static_cast<int>(x.size()) != sub.ambient())
    fail("DimensionMismatch", "vector length does not match the subspace ambient dimension");
  return sub.reduce(x);
}

const Subspace& Filtration::power(int n) const {
  if (n < 1 || n > s + 1) fail("BadTruncation", "A^" + std::to_string(n) + " is not stored");
  return powers[n - 1];
}

int Filtration::dim_layer(int n) const {
  if (n < 1) fail("BadTruncation", "layer index must be >= 1");
  if (n > s) return 0;
  return layer_dims[n - 1];
}

int Filtration::dim_power(int n) const {
  if (n > s) return 0;
  return powers[n - 1].dim();
}

std::vector<Vec> Filtration::layer_reps(int n) const {
  std::vector<Vec> reps;
  if (n > s) return reps;
  const Subspace& an = powers[n - 1];
  const Subspace& next = powers[n];  // A^{n+1}; empty when n == s
  const auto& np = next.pivots();
  for (size_t i = 0; i < an.rows().size(); ++i) {
    if (std::binary_search(np.begin(), np.end(), an.pivots()[i])) continue;
    reps.push_back(next.reduce(an.rows()[i]));
  }
  return reps;
}

int Filtration::grade(const Vec& x) const {
  if (vec_is_zero(x)) return kGradeInfinity;
  if (augmentation(field, x) != 0) return 0;
  int n = 1;
  while (n < s + 1 && power(n + 1).contains(x)) ++n;
  return n;
}

Vec Filtration::class_at(const Vec& x, int n) const { return power(n + 1).reduce(x); }

Filtration radical_filtration(const Group& g, const Field& f) {
  const int n = g.order();
  {
    int m = n;
    while (m % f.p() == 0) m /= f.p();
    if (m != 1)
      fail("CharacteristicMismatch",
           "|G| = " + std::to_string(n) + " is not a power of char K = " + std::to_string(f.p()));
  }
  Filtration filt;
  filt.group = &g;
  filt.field = f;

  // A^1 in closed form: pivot at column g, coefficient -1 on the identity.
  Subspace a1(filt.field, n);
  for (Elt x = 1; x < n; ++x) a1.insert(elem_minus_one(g, filt.field, x));
  filt.powers.push_back(std::move(a1));

  while (filt.powers.back().dim() > 0) {
    const Subspace& prev = filt.powers.back();
    Subspace next(filt.field, n);
    // A^{k+1} = sum over generators x of A^k (x - 1).
    for (const Vec& row : prev.rows()) {
      for (int i = 0; i < g.ngens(); ++i)
        next.insert(vec_sub(filt.field, translate(g, row, g.gen(i)), row));
    }
    if (next.dim() >= prev.dim())
      fail("CharacteristicMismatch", "augmentation ideal is not nilpotent");
    filt.powers.push_back(std::move(next));
  }
  filt.s = static_cast<int>(filt.powers.size()) - 1;
  filt.layer_dims.resize(filt.s);
  for (int k = 0; k < filt.s; ++k)
    filt.layer_dims[k] = filt.powers[k].dim() - filt.powers[k + 1].dim();
  return filt;
}

std::pair<int, Vec> graded_class(const Filtration& filt, const Vec& x) {
  const int n = filt.grade(x);
  if (n == kGradeInfinity) return {n, vec_zero(static_cast<int>(x.size()))};
  if (n == 0) return {0, x};
  return {n, filt.class_at(x, n)};
}

std::vector<Elt> dimension_subgroup(const Group& g, const Filtration& filt, int n) {
  if (n < 1) fail("BadTruncation", "dimension subgroup index must be >= 1");
  const Subspace& an = filt.power(std::min(n, filt.s + 1));
  std::vector<Elt> members{0};
  for (Elt x = 1; x < g.order(); ++x)
    if (an.contains(elem_minus_one(g, filt.field, x))) members.push_back(x);
  return members;
}

Quotient::Quotient(const Filtration& filt, int m) : filt_(&filt), m_(m) {
  if (m < 1 || m > filt.s + 1) fail("BadTruncation", "truncation must lie in [1, s+1]");
}

Vec Quotient::reduce(const Vec& x) const { return filt_->power(m_).reduce(x); }

Vec Quotient::mul(const Vec& x, const Vec& y) const {
  return reduce(alg_mul(*filt_->group, filt_->field, x, y));
}

Vec Quotient::add(const Vec& x, const Vec& y) const {
  return reduce(vec_add(filt_->field, x, y));
}

bool Quotient::eq(const Vec& x, const Vec& y) const { return reduce(x) == reduce(y); }

Quotient quotient_algebra(const Group& g, const Field& f, const Filtration& filt, int m) {
  (void)g;
  (void)f;
  return Quotient(filt, m);
}

}  // namespace fmb
