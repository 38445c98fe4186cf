#pragma once
#include <map>
#include <string>
#include <vector>

#include "fmb/algebra.hpp"

namespace fmb {

struct BasisCandidate {
  std::vector<Vec> elements;  // |G| vectors, first one expected to be 1
  std::string source;
};

struct VerifyReport {
  bool is_basis = false;
  bool shape_ok = false;  // size |G|, identity present first, pairwise distinct
  bool rank_ok = false;
  bool radical_ok = false;  // B minus {1} is a basis of A
  std::vector<std::pair<int, int>> closure_failures;
  std::map<int, bool> radical_layer_ok;  // property (I) per n <= s
  bool property2_ok = false;             // distinct classes per grade
  std::vector<int> grades;
  std::string detail;
  std::string summary() const;
};

// Full check of the filtered multiplicative basis conditions: rank, exact
// closure (uv = 0 or uv in B), B cap A a basis of A, and per-layer counts
// with independent classes. Every failure is recorded, not just the first.
VerifyReport verify_fm_basis(const Group& g, const Field& f, const Filtration& filt,
                             const BasisCandidate& cand);

// Histogram grade -> element count.
std::map<int, int> basis_grading(const Filtration& filt, const BasisCandidate& cand);

}  // namespace fmb
