// The one-shot verification suite: every check the library's correctness
// rests on, runnable from the CLI (`verify`) and from the acceptance test
// binary. `Quick` trims the sweep sizes to stay interactive; `Full` runs
// the complete ranges.
#pragma once

#include <string>
#include <vector>

namespace hopfknots::verify {

enum class Level { Quick, Full };

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // counterexample or timing note
  double seconds = 0.0;
};

std::vector<CriterionResult> run_all(Level level);

// Prints "PASS/FAIL  #n name (detail)" lines to stdout; returns true when
// everything passed.
bool report(const std::vector<CriterionResult>& results);

}  // namespace hopfknots::verify
