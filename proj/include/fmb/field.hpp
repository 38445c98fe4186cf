#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fmb {

// Element of GF(p^k), encoded as c0 + c1*p + ... + c_{k-1}*p^{k-1} in the
// polynomial basis (coefficients low degree first).
using Fel = std::uint8_t;

// GF(p^k) with precomputed operation tables. Immutable; cheap to share.
class Field {
public:
  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  // Monic modulus polynomial, ascending coefficients, length k+1.
  const std::vector<int>& modulus() const { return modulus_; }

  Fel add(Fel a, Fel b) const { return add_[a * q_ + b]; }
  Fel sub(Fel a, Fel b) const { return add_[a * q_ + neg_[b]]; }
  Fel mul(Fel a, Fel b) const { return mul_[a * q_ + b]; }
  Fel neg(Fel a) const { return neg_[a]; }
  Fel inv(Fel a) const;
  Fel one() const { return 1; }

  std::vector<int> coeffs(Fel a) const;
  std::string label() const;  // "GF(4)" etc.

  bool operator==(const Field& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

  // Empty field; usable only after assignment from field_make.
  Field() = default;

  friend Field field_make(int p, int k, const std::vector<int>* modulus);

private:
  int p_ = 0, k_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<Fel> add_, mul_, neg_;
  std::vector<Fel> inv_;
};

// Builds GF(p^k). When modulus is absent the lexicographically smallest monic
// irreducible of degree k over GF(p) is chosen, so equal inputs always give
// identical fields. Throws NotPrime / DegreeMismatch / ReducibleModulus.
Field field_make(int p, int k, const std::vector<int>* modulus = nullptr);

// Witness of a primitive cube root of unity, if one exists (3 | q-1, p != 3).
// The witness is the smallest code w with w^3 = 1, w != 1.
std::optional<Fel> has_primitive_cube_root(const Field& f);

}  // namespace fmb
