#pragma once

#include <string>
#include <vector>

namespace shardfan {

// Outcome of a theorem-level verification. Violations are collected, never
// thrown: on genuine g-fans they are impossible, on synthetic inputs they
// are the interesting output.
struct CheckResult {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string message) {
    ok = false;
    violations.push_back(std::move(message));
  }
  void merge(const CheckResult& other) {
    ok = ok && other.ok;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

}  // namespace shardfan
