#pragma once

#include "shardfan/dot.hpp"

namespace shardfan {

enum class Suite { All, Lattice, Shards, Intersections };

Suite suite_from_string(const std::string& name);  // throws std::invalid_argument
const char* suite_name(Suite suite);

struct VerifyOptions {
  Suite suite = Suite::All;
  int threads = 1;
  std::optional<FeasibilityEngine> engine;
};

struct VerifyCheck {
  std::string name;
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;
};

struct VerifyCounts {
  int chambers = -1;
  int faces = -1;
  int walls = -1;
  int plates = -1;
  int shards = -1;
  int join_irreducibles = -1;
  int shard_intersections = -1;
};

struct VerifyReport {
  std::string fan_name;
  int dim = 0;
  Suite suite = Suite::All;
  bool input_ok = false;
  ValidationReport validation;
  std::vector<VerifyCheck> checks;
  VerifyCounts counts;
  double elapsed_ms = 0.0;

  bool all_passed() const;
};

// Runs the theorem suites in order: validation, lattice structure and
// semidistributivity, star intervals and crowns, shard construction and the
// join-irreducible bijection, canonical join representations via both
// routes, shard intersections with closure, anti-isomorphism, Gamma(U),
// gradedness, and the arrangement oracle where applicable. Violations are
// report entries, not exceptions.
VerifyReport run_verify_suite(const Fan& fan, const VerifyOptions& opts = {});

/// Stable key order; timing included only on request (kept byte-deterministic).
std::string report_to_json(const VerifyReport& report, bool include_timing = false);
std::string report_to_text(const VerifyReport& report);

}  // namespace shardfan
