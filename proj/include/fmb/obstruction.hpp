#pragma once
#include <functional>
#include <string>
#include <vector>

#include "fmb/algebra.hpp"

namespace fmb {

// All words of length 1..L over d1 candidate generators, with values reduced
// in KG/A^m. Word ids are length-major; within a length, digits are read
// first letter most significant.
struct WordClassTable {
  int d1 = 0, L = 0, m = 0;
  std::vector<long long> off;     // off[l] = first id of length l, l = 1..L+1
  std::vector<Vec> values;        // reduced mod A^m
  std::vector<int> grades;        // grade of the reduced value, clamped to m
  std::vector<Vec> length_class;  // class at grade = word length (leading data)

  long long total() const { return off[L]; }
  int len_of(long long id) const;
  long long prefix_of(long long id) const;
  int last_letter(long long id) const;
  long long append(long long id, int letter) const;  // -1 when too long
  std::string word_name(long long id) const;         // e.g. "b1b2b1"
};

// Builds the table for the given grade-1 lifts. Throws DependentLeadingTerms
// when the lifts' grade-1 classes are not independent. m defaults to L+1.
WordClassTable word_classes(const Group& g, const Field& f, const Filtration& filt,
                            const std::vector<Vec>& lifts, int L, int m = 0);

// LeadingOnly uses only the correction-free data (classes of length-k words at
// grade k, plus equality propagation); Concrete additionally checks deferred
// classes and exact equality of words forced to coincide.
enum class CheckMode { LeadingOnly, Concrete };

struct CheckOutcome {
  bool pass = true;
  int grade = 0;
  std::string kind;    // "N1-count", "N1-rank", "N2", "coverage"
  std::string detail;
  std::vector<std::pair<long long, long long>> forced;  // word equalities implied
};

CheckOutcome check_necessary(const WordClassTable& table, const Filtration& filt, int m,
                             CheckMode mode = CheckMode::LeadingOnly, int kmax = 0);

enum class ObstructStatus { Certified, Inconclusive, BudgetExhausted };

struct MatrixVerdict {
  long long index = 0;  // position in the GL enumeration
  bool survived = false;
  int eliminated_at = 0;
  std::string kind;
  std::string note;  // forced equalities for survivors
};

struct ObstructionReport {
  std::string group_name, field_label;
  int m = 0;
  int d1 = 0;
  long long budget = 0, nodes = 0, matrices = 0, survivors = 0;
  ObstructStatus status = ObstructStatus::Inconclusive;
  std::vector<MatrixVerdict> verdicts;
  std::string render() const;
};

// Exhaustive elimination over all leading matrices and truncated correction
// assignments. All-eliminated certifies non-existence at truncation m; any
// surviving configuration (or an exhausted budget) leaves the report
// inconclusive.
ObstructionReport obstruct(const Group& g, const Field& f, int m, long long budget = 10'000'000,
                           int jobs = 1);

// Invertible d x d matrices over f in row-lexicographic order, flattened
// row-major. The callback returns false to stop the enumeration.
void enumerate_gl(const Field& f, int d, const std::function<bool(const std::vector<Fel>&)>& cb);

}  // namespace fmb
