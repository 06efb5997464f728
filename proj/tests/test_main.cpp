#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "test_support.hpp"

// Accepts --seed=N / --seed N in addition to the usual doctest flags.
int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int k = 0; k < argc; ++k) {
    if (std::strncmp(argv[k], "--seed=", 7) == 0) {
      lsym::testing::set_seed(std::stoull(argv[k] + 7));
    } else if (std::strcmp(argv[k], "--seed") == 0 && k + 1 < argc) {
      lsym::testing::set_seed(std::stoull(argv[++k]));
    } else {
      rest.push_back(argv[k]);
    }
  }
  std::cout << "seed " << lsym::testing::seed() << "\n";
  doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
