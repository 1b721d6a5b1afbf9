// Acceptance runner: one pass/fail line per criterion, nonzero exit on any
// failure. The same suite backs `homforge selfcheck`.

#include <cstring>
#include <iostream>

#include "homforge/selfcheck.hpp"

int main(int argc, char** argv) {
  std::string filter;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--filter") == 0) filter = argv[i + 1];
  auto results = homforge::run_acceptance(filter);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " " << r.name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << std::endl;
    all = all && r.pass;
  }
  return all && !results.empty() ? 0 : 1;
}
