#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace pinf {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

constexpr std::uint64_t kDefaultSeed = 20240917;

/// Runs the acceptance criteria (all of them when `only` is empty). A
/// criterion passes when every check holds and it finishes within its time
/// limit. Progress lines go to `log` when given.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& only = {},
                                            std::ostream* log = nullptr);

std::string format_result(const CriterionResult& r);

}  // namespace pinf
