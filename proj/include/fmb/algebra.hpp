#pragma once
#include <limits>
#include <vector>

#include "fmb/field.hpp"
#include "fmb/group.hpp"

namespace fmb {

// Element of KG: one field coefficient per group-element index.
using Vec = std::vector<Fel>;

constexpr int kGradeInfinity = std::numeric_limits<int>::max();

Vec vec_zero(int n);
Vec vec_one(int n);                                        // the identity basis vector
Vec elem_minus_one(const Group& g, const Field& f, Elt x);  // x - 1
bool vec_is_zero(const Vec& v);
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, Fel c, const Vec& a);

// Convolution product over the Cayley table. Iterates the support of the
// sparser operand.
Vec alg_mul(const Group& g, const Field& f, const Vec& x, const Vec& y);

// x * g (right translation by a group element; a coordinate permutation).
Vec translate(const Group& g, const Vec& x, Elt by);

Fel augmentation(const Field& f, const Vec& x);

// Row-reduced subspace of K^n. Rows are kept in reduced echelon form with
// unit pivots, ordered by pivot column.
class Subspace {
public:
  explicit Subspace(const Field& f, int n) : f_(&f), n_(n) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return n_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Canonical remainder of v after eliminating the pivot columns.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
  // Inserts v if independent; returns true when the dimension grew.
  bool insert(const Vec& v);

private:
  const Field* f_;
  int n_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

Vec reduce_mod(const Subspace& sub, const Vec& x);

// The chain A(KG) > A^2 > ... > A^s > A^{s+1} = 0 plus per-layer data.
struct Filtration {
  const Group* group = nullptr;
  Field field;
  int s = 0;                     // nilpotency length: A^s != 0, A^{s+1} = 0
  std::vector<Subspace> powers;  // powers[k] = A^{k+1} for k = 0..s, including the zero space
  std::vector<int> layer_dims;   // layer_dims[k] = dim A^{k+1}/A^{k+2}, k = 0..s-1

  const Subspace& power(int n) const;         // A^n, 1 <= n <= s+1
  int dim_layer(int n) const;                 // dim A^n/A^{n+1}, n >= 1
  int dim_power(int n) const;                 // dim A^n
  // Canonical representatives of a basis of A^n/A^{n+1}.
  std::vector<Vec> layer_reps(int n) const;

  int grade(const Vec& x) const;              // max n with x in A^n; 0 / kGradeInfinity
  Vec class_at(const Vec& x, int n) const;    // reduce_mod(A^{n+1}, x)
};

// Builds the radical filtration by closing A^n * (gen - 1) products.
// Throws CharacteristicMismatch when |G| is not a power of char K.
Filtration radical_filtration(const Group& g, const Field& f);

// (grade, canonical class) of x; grade 0 when augmentation is nonzero,
// kGradeInfinity when x = 0.
std::pair<int, Vec> graded_class(const Filtration& filt, const Vec& x);

// {g in G : g - 1 in A^n}.
std::vector<Elt> dimension_subgroup(const Group& g, const Filtration& filt, int n);

// Arithmetic in KG/A^m via canonical representatives.
class Quotient {
public:
  Quotient(const Filtration& filt, int m);
  int m() const { return m_; }
  Vec reduce(const Vec& x) const;
  Vec mul(const Vec& x, const Vec& y) const;
  Vec add(const Vec& x, const Vec& y) const;
  bool eq(const Vec& x, const Vec& y) const;

private:
  const Filtration* filt_;
  int m_;
};

Quotient quotient_algebra(const Group& g, const Field& f, const Filtration& filt, int m);

}  // namespace fmb
