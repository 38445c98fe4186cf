#include "fmb/field.hpp"

#include <algorithm>

#include "fmb/error.hpp"

namespace fmb {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as ascending coefficient vectors.
using Poly = std::vector<int>;

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  a = poly_trim(std::move(a));
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int lead = a.back();  // m is monic
    for (int i = 0; i <= dm; ++i) {
      a[i + shift] = ((a[i + shift] - lead * m[i]) % p + p) % p;
    }
    a = poly_trim(std::move(a));
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

Poly code_to_poly(int code, int p, int k) {
  Poly a(k);
  for (int i = 0; i < k; ++i) {
    a[i] = code % p;
    code /= p;
  }
  return poly_trim(std::move(a));
}

int poly_to_code(const Poly& a, int p) {
  int code = 0, w = 1;
  for (int c : a) {
    code += c * w;
    w *= p;
  }
  return code;
}

// Trial division by all monic polynomials of degree 1..deg/2.
bool is_irreducible(const Poly& m, int p) {
  const int deg = static_cast<int>(m.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly div = code_to_poly(code, p, d);
      div.resize(d + 1, 0);
      div[d] = 1;
      if (poly_mod(m, div, p).empty()) return false;
    }
  }
  return true;
}

Poly default_modulus(int p, int k) {
  if (k == 1) return {0, 1};  // x
  int count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  // Ascending-coefficient lexicographic order: c0 varies slowest.
  std::vector<int> c(k, 0);
  for (int iter = 0; iter < count; ++iter) {
    Poly m(c.begin(), c.end());
    m.push_back(1);
    if (is_irreducible(m, p)) return m;
    for (int i = k - 1; i >= 0; --i) {
      if (++c[i] < p) break;
      c[i] = 0;
    }
  }
  fail("ReducibleModulus", "no irreducible modulus found");  // unreachable
}

}  // namespace

Fel Field::inv(Fel a) const {
  if (a == 0) fail("DivisionByZero", "inverse of zero in " + label());
  return inv_[a];
}

std::vector<int> Field::coeffs(Fel a) const {
  std::vector<int> c(k_);
  int v = a;
  for (int i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

std::string Field::label() const { return "GF(" + std::to_string(q_) + ")"; }

Field field_make(int p, int k, const std::vector<int>* modulus) {
  if (!is_prime(p)) fail("NotPrime", std::to_string(p) + " is not prime");
  if (k < 1) fail("DegreeMismatch", "extension degree must be >= 1");
  long long qll = 1;
  for (int i = 0; i < k; ++i) {
    qll *= p;
    if (qll > 256) fail("DegreeMismatch", "field too large (q > 256)");
  }
  Field f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<int>(qll);

  if (modulus) {
    if (static_cast<int>(modulus->size()) != k + 1 || modulus->back() % p != 1)
      fail("DegreeMismatch", "modulus must be monic of degree k");
    Poly m(*modulus);
    for (int& c : m) c = ((c % p) + p) % p;
    if (k >= 2 && !is_irreducible(m, p))
      fail("ReducibleModulus", "modulus is reducible over GF(" + std::to_string(p) + ")");
    f.modulus_ = m;
  } else {
    f.modulus_ = default_modulus(p, k);
  }

  const int q = f.q_;
  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);
  f.inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    const Poly pa = code_to_poly(a, p, k);
    for (int b = 0; b < q; ++b) {
      const Poly pb = code_to_poly(b, p, k);
      Poly s(std::max(pa.size(), pb.size()), 0);
      for (size_t i = 0; i < pa.size(); ++i) s[i] += pa[i];
      for (size_t i = 0; i < pb.size(); ++i) s[i] = (s[i] + pb[i]) % p;
      f.add_[a * q + b] = static_cast<Fel>(poly_to_code(poly_trim(std::move(s)), p));
      f.mul_[a * q + b] =
          static_cast<Fel>(poly_to_code(poly_mod(poly_mul(pa, pb, p), f.modulus_, p), p));
    }
  }
  for (int a = 0; a < q; ++a) {
    Poly pa = code_to_poly(a, p, k);
    for (int& c : pa) c = (p - c) % p;
    f.neg_[a] = static_cast<Fel>(poly_to_code(poly_trim(std::move(pa)), p));
    for (int b = 0; b < q; ++b)
      if (f.mul_[a * q + b] == 1) f.inv_[a] = static_cast<Fel>(b);
  }
  return f;
}

std::optional<Fel> has_primitive_cube_root(const Field& f) {
  if (f.p() == 3 || (f.q() - 1) % 3 != 0) return std::nullopt;
  for (int w = 2; w < f.q(); ++w) {
    Fel ww = f.mul(static_cast<Fel>(w), static_cast<Fel>(w));
    if (f.mul(ww, static_cast<Fel>(w)) == 1) return static_cast<Fel>(w);
  }
  return std::nullopt;
}

}  // namespace fmb
