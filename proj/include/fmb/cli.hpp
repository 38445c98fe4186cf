#pragma once
#include <string>
#include <vector>

namespace fmb {

// Command-line front end. Exit codes: 0 verified/found/certified, 1 refuted or
// not found or inconclusive, 2 usage or input error, 3 budget exhausted.
int run_cli(const std::vector<std::string>& args);

}  // namespace fmb
