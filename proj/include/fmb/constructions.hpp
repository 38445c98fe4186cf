#pragma once
#include <optional>
#include <string>
#include <vector>

#include "fmb/verify.hpp"

namespace fmb {

// Product basis {(a_1-1)^{n_1} ... (a_s-1)^{n_s}} over a cyclic decomposition
// computed from the presentation. Throws NotAbelian.
BasisCandidate abelian_basis(const Group& g, const Field& f);

// Embeds B1 x B2 into K[G1 x G2]; gprod must be the direct product of g1 and
// g2 in that order. Throws FieldMismatch / SizeMismatch.
BasisCandidate product_basis(const Group& gprod, const Field& f, const Group& g1,
                             const BasisCandidate& b1, const Group& g2,
                             const BasisCandidate& b2);

// Alternating words in u = 1+b, v = 1+ab for the dihedral group of order 2^n.
BasisCandidate dihedral_basis(const Group& g, const Field& f);

// Layered word chain in u = 1+g1, v = 1+g2 seeded with {uv, vu, u^2, v^2};
// each next layer is the u-prefixed plus v-suffixed words of the previous one,
// dropping zero values. Covers the two-generator central-commutator family.
BasisCandidate theorem2_basis(const Group& g, const Field& f);

// The four-letter recipe for G_49 with letters (1+a)+(1+c), (1+b)+(1+d),
// (1+b)+(1+c)+(1+d), (1+a)+(1+b)+(1+c), closed under multiplication; falls
// back to a bounded search when the letters do not close. Throws RepairFailed.
BasisCandidate g49_basis(const Group& g, const Field& f, long long budget = 10'000'000);

// Search-backed basis for Q8 over a field with a primitive cube root.
// Throws NoCubeRoot / CharacteristicMismatch / SearchExhausted.
BasisCandidate q8_basis(const Group& g, const Field& f, long long budget = 100'000'000);

// Dispatcher: builds the basis for a positive catalog entry by name, including
// 'x'-products. Throws when no construction is known or the search fails.
BasisCandidate construct_for(const std::string& name, const Group& g, const Field& f,
                             long long budget = 100'000'000);

}  // namespace fmb
