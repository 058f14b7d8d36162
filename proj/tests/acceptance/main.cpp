#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "pinf/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = pinf::kDefaultSeed;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--seed" && i + 1 < argc)
      seed = std::stoull(argv[++i]);
    else
      only.push_back(std::stoi(a));
  }
  auto results = pinf::run_acceptance(seed, only, &std::cout);
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
