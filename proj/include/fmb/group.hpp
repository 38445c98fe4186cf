#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fmb {

// Group element index into the lexicographic enumeration of normal forms.
using Elt = std::uint16_t;

// A word in the pc generators: (generator index, exponent) pairs, exponents >= 1.
using Word = std::vector<std::pair<int, int>>;

// Power-commutator presentation. Generator i has relative order relorder[i];
// its relorder-th power equals powerrel[i] (a normal word). For j > i,
// commrel[{j,i}] holds the commutator (g_j, g_i) = g_j^-1 g_i^-1 g_j g_i as a
// normal word; absent pairs commute.
struct GroupSpec {
  std::string name;
  std::vector<std::string> gens;
  std::vector<int> relorders;
  std::vector<Word> powerrels;
  std::map<std::pair<int, int>, Word> commrels;

  int gen_index(const std::string& g) const;
  long long declared_order() const;
};

// Finite p-group with verified Cayley table. Element 0 is the identity; the
// element order is the lexicographic order of normal-form exponent vectors.
class Group {
public:
  const GroupSpec& spec() const { return spec_; }
  int order() const { return n_; }
  int ngens() const { return static_cast<int>(spec_.relorders.size()); }

  Elt mul(Elt x, Elt y) const { return cayley_[static_cast<size_t>(x) * n_ + y]; }
  Elt inverse(Elt x) const { return inv_[x]; }
  Elt gen(int i) const { return gen_elt_[i]; }

  std::vector<int> exponents(Elt x) const;
  Elt from_exponents(const std::vector<int>& e) const;
  Elt eval_word(const Word& w) const;
  Elt pow(Elt x, long long e) const;
  int order_of(Elt x) const;
  std::string describe(Elt x) const;  // normal form like "a^2*b"

  friend Group group_from_spec(const GroupSpec& spec);

private:
  Group() = default;
  GroupSpec spec_;
  int n_ = 0;
  std::vector<int> radix_;  // index weight of each generator
  std::vector<Elt> gen_elt_;
  std::vector<Elt> cayley_;
  std::vector<Elt> inv_;
};

struct SubgroupChain {
  std::vector<std::vector<Elt>> terms;  // descending, first = G, last = {1}
};

// Builds the Cayley table by collection from the left, then verifies the group
// axioms and all relations. Throws OrderMismatch / RelationViolation /
// InconsistentPresentation.
Group group_from_spec(const GroupSpec& spec);

// Componentwise product; element order is the lexicographic pair order.
// Throws OrderOverflow when the result exceeds max_order.
GroupSpec direct_product_spec(const GroupSpec& a, const GroupSpec& b);
Group direct_product(const Group& a, const Group& b, int max_order = 256);

Elt commutator(const Group& g, Elt x, Elt y);
std::vector<Elt> subgroup_generated(const Group& g, const std::vector<Elt>& seeds);

// Lazard-Jennings series M_1 = G, M_i = <(M_{i-1},G), p-th powers of M_{ceil(i/p)}>.
SubgroupChain lazard_series(const Group& g, int p);

bool is_powerful(const Group& g, int p);

// The prime p with |G| = p^t, or 0 if |G| is not a prime power.
int group_prime(const Group& g);

}  // namespace fmb
