#include <vector>

#include "fmb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fmb::run_cli(args);
}
