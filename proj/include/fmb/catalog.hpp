#pragma once
#include <optional>
#include <string>
#include <vector>

#include "fmb/group.hpp"

namespace fmb {

struct CatalogParams {
  std::optional<int> n, m, p;
};

// Resolves a catalog label (C4, D8, Q16, SD32, MD16, H_16, D8YC4, H_1, H_2,
// T2, T3, G_2..G_50, and 'x'-products of labels) to its presentation.
// Throws UnknownLabel / BadParams.
GroupSpec catalog_lookup(const std::string& name, const CatalogParams& params = {});

// Label list used by selftests and batch runs, one entry per cataloged group
// of manageable size.
std::vector<std::string> catalog_names();

// Text form of a presentation:
//   gen <name> order <q> power <word>
//   comm <gj> <gi> <word>
// Words are name^e*name^e*...; "1" denotes the empty word.
GroupSpec parse_group_text(const std::vector<std::string>& lines, const std::string& name);
std::vector<std::string> group_text(const GroupSpec& spec);
Word parse_word(const GroupSpec& spec, const std::string& text);
std::string word_text(const GroupSpec& spec, const Word& w);

}  // namespace fmb
