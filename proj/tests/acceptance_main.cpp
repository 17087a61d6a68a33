// Acceptance runner: executes the full reproduction suite and fails on any
// check marked FAIL. Pass --quick for the reduced variant.
#include <cstring>
#include <iostream>

#include "dicelab/reproduce.hpp"

int main(int argc, char** argv) {
  dicelab::repro::Options options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) options.quick = true;
  }
  const auto results = dicelab::repro::run_reproduction_suite(options, std::cout);
  return dicelab::repro::suite_passed(results) ? 0 : 1;
}
