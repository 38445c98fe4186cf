#pragma once
#include <string>
#include <vector>

#include "fmb/algebra.hpp"

namespace fmb {

// Layer representatives of the Lazard-Jennings factors M_i/M_{i+1} and the
// derived weight data. reps are flattened in (layer, rep) order; weights[r]
// is the layer index of reps[r].
struct JenningsProfile {
  std::vector<std::vector<Elt>> layers;  // layers[i] = representatives of M_{i+1}/M_{i+2}
  std::vector<Elt> reps;
  std::vector<int> weights;
  std::vector<int> dims;  // dims[i] = d_{i+1}
  int p = 0;
  int weightsum = 0;  // sum over layers of layer_index * d_layer
};

// Representatives are the first group elements (global element order) whose
// images extend an independent set in the elementary abelian factor.
JenningsProfile jennings_profile(const Group& g, int p);

// Regular monomials prod (u - 1)^y of weight >= t, in lexicographic exponent
// order (first representative most significant). t = 0 yields |G| monomials.
struct RegularMonomial {
  std::vector<int> exps;
  int weight = 0;
  Vec value;
};
std::vector<RegularMonomial> regular_basis(const JenningsProfile& prof, const Group& g,
                                           const Field& f, int t);

// Rank of the weight->=t monomials against dim A^t, for every t <= s+1.
struct CrosscheckRow {
  int t = 0;
  int monomial_rank = 0;
  int dim_power = 0;
  bool ok = false;
};
struct CrosscheckReport {
  std::vector<CrosscheckRow> rows;
  bool pass = true;
  std::string summary() const;
};
CrosscheckReport jennings_crosscheck(const Group& g, const Field& f, const Filtration& filt,
                                     const JenningsProfile& prof);

}  // namespace fmb
