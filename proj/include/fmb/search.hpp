#pragma once
#include <string>
#include <vector>

#include "fmb/verify.hpp"

namespace fmb {

struct SearchConfig {
  long long max_nodes = 10'000'000;
  int correction_depth = 2;  // corrections at grades 2 .. 1+depth
  bool exhaustive = false;   // corrections through grade s-1 (full coverage)
  std::vector<Vec> seed_letters;  // fixed grade-1 lifts instead of the GL sweep
  bool deterministic = true;
  int jobs = 1;
};

enum class SearchStatus { Found, NotFoundComplete, BudgetExhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::NotFoundComplete;
  BasisCandidate candidate;
  long long nodes = 0;
  // True when the explored space provably covers the generators of every
  // possible basis (all leading matrices, corrections through grade s-1).
  bool complete = false;
  std::string note;
};

// Grade-by-grade depth-first search for a filtered multiplicative basis:
// leading matrices in row-lexicographic order, correction coordinates over
// the layer complements, necessary-condition pruning per grade, and a full
// closure plus verify_fm_basis at every surviving configuration.
SearchResult dfs_search(const Group& g, const Field& f, const SearchConfig& cfg = {});

// Values of all words over the letter set, including 1; empty when the
// closure does not stop at exactly |G| distinct nonzero values.
std::vector<Vec> multiplicative_closure(const Group& g, const Field& f,
                                        const std::vector<Vec>& letters);

}  // namespace fmb
