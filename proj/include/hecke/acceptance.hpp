#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hecke/levels.hpp"

namespace hecke::acceptance {

struct Config {
  std::uint64_t seed = 20240611;
  int trials = 1000;
  long long budget = kDefaultBudget;
};

struct Result {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;
};

inline constexpr int kCriteria = 10;

Result run_criterion(int id, const Config& cfg);
// Runs every criterion, writing each result to out as soon as it is known.
std::vector<Result> run_all(const Config& cfg, std::ostream& out);
// "[PASS] 3 title" followed by indented detail lines.
std::string format(const Result& r);

}  // namespace hecke::acceptance
