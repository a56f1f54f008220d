#include <cstdlib>
#include <iostream>

#include "hecke/acceptance.hpp"

int main() {
  hecke::acceptance::Config cfg;
  cfg.budget = hecke::budget_from_env(cfg.budget);
  const auto results = hecke::acceptance::run_all(cfg, std::cout);
  int failed = 0;
  for (const auto& r : results) failed += !r.pass;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
