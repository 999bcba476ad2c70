#pragma once

#include <string>
#include <vector>

#include "tangentfree/gfq.hpp"

namespace tfs {

enum class SuiteLevel { Quick, Full, Long };

struct SuiteCheck {
  std::string name;
  bool pass = false;
  tangentfree::Json detail;
};

struct SuiteOptions {
  int workers = 0;
  /// Budget per long-mode search, seconds.
  double long_budget = 4 * 3600.0;
};

/// Each level includes the checks of the levels below it.
std::vector<SuiteCheck> run_theorem_suite(SuiteLevel level, const SuiteOptions& options);

}  // namespace tfs
