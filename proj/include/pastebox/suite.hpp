#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace pastebox {

struct SuiteConfig {
  std::uint64_t seed = 0;
  /// Check names to skip.
  std::set<std::string> skip;
  /// Skip checks tagged slow.
  bool quick = false;
  /// Fixture override directory for this run.
  std::optional<std::string> fixtureDir;
};

enum class CheckStatus { Pass, Fail, Skipped };
const char* toString(CheckStatus s);

struct CheckResult {
  std::string name;
  std::string title;
  CheckStatus status = CheckStatus::Pass;
  double elapsedMs = 0;
  /// Counterexamples on failure, recorded values on success.
  nlohmann::json details;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  nlohmann::json toJson() const;
};

inline constexpr int kReportSchema = 1;

struct SuiteCheckInfo {
  std::string name;
  std::string title;
  bool slow = false;
};

/// The acceptance checks, in order.
std::vector<SuiteCheckInfo> suiteChecks();

/// Runs the acceptance checks. Results are sorted by check name.
SuiteReport runSuite(const SuiteConfig& config);

}  // namespace pastebox
