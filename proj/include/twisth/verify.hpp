#pragma once

#include <string>
#include <vector>

#include "twisth/constellation.hpp"

namespace twisth {

struct SuiteResult {
  std::string name;
  long instances = 0;
  long failures = 0;
  std::vector<std::string> notes;  // one per failure, first few kept

  bool pass() const { return failures == 0; }
};

struct VerifyOptions {
  int n_max = 2;
  int m_max = 3;
  int workers = 1;
  bool inject_fault = false;  // test hook: corrupt one delta, must be caught
};

// Exhaustive-search orientability oracle: per component, search all local
// orientation flips (2^V assignments) for a presentation in which s0 never
// preserves the side. Independent of the bipartiteness route.
std::vector<bool> orientability_flip_oracle(const FlagMap& map);

// All cross-module identity suites at the given bounds.
std::vector<SuiteResult> run_verification(const VerifyOptions& opts);

bool all_pass(const std::vector<SuiteResult>& results);

}  // namespace twisth
