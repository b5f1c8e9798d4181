// Named checks grouped per lemma.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace trigineq {

struct Check {
  std::string name;
  std::string formula;  // the display the check verifies
  bool exact = false;   // exact arithmetic, or floating point at working precision
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> details;
};

struct LemmaReport {
  std::string lemma_id;  // L1cond, L2transfer, L3 .. L7
  long n = 0;
  std::vector<Check> checks;
  std::string warning;

  bool passed() const {
    for (const Check& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
  Check& add(std::string name, std::string formula, bool exact, bool pass) {
    checks.push_back(Check{std::move(name), std::move(formula), exact, pass, {}});
    return checks.back();
  }
};

}  // namespace trigineq
