#pragma once

#include <string>
#include <vector>

namespace homforge {

struct CriterionResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the embedded desk-scale acceptance suite. `filter` keeps only the
/// criteria whose id or name contains the given substring.
std::vector<CriterionResult> run_acceptance(const std::string& filter = "");

}  // namespace homforge
