#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fintop/verdict.hpp"

namespace fintop {

struct CheckResult {
  std::string id;
  Verdict status = Verdict::vacuous;
  /// Smallest failing instance key; always set when status is fail.
  std::optional<std::string> witness;
  std::uint64_t population = 0;  // instances scanned
  std::uint64_t applicable = 0;  // instances where the hypothesis held
  std::uint64_t failures = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct VerificationReport {
  std::string suite_id;
  int max_points = 0;
  std::vector<std::string> groups;
  std::vector<CheckResult> checks;  // ascending by id
  std::map<std::string, std::uint64_t> counts;

  bool passed() const noexcept;
  const CheckResult* find(std::string_view id) const noexcept;
};

struct SuiteBounds {
  int max_points = 4;
  /// Built-in group specs; empty means the default fixture set.
  std::vector<std::string> groups;
  int jobs = 1;
  /// Check id whose outcome is forced to fail, for exercising the failure
  /// path end to end.
  std::string inject_failure;
};

/// Suites: "spaces", "maps", "groups", "all". Throws unknown_suite or
/// bounds_too_large.
VerificationReport run_suite(std::string_view suite_id, const SuiteBounds& bounds);

std::vector<std::string> default_suite_groups();

/// Fixed field order. Timings are emitted only when requested so that
/// reports can be compared byte for byte.
std::string report_to_json(const VerificationReport& report, bool include_timings = true);

}  // namespace fintop
