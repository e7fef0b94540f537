#pragma once

#include <string>
#include <vector>

#include "apery/eval.hpp"

namespace apery {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Desk-scale invariant suite across all modules. `only` filters by name
// prefix ("exact", "mzv", "formulas", "contour", "oracle"); `precision`
// loosens or tightens the numeric gates (default 1e-8).
std::vector<CheckResult> selftest(const std::string& only = "", real_t precision = 1e-8L);

}  // namespace apery
