#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hmkit/laws.hpp"

namespace hmkit {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitUsage = 2,
  kExitBudgetOrIo = 3,
};

struct RunConfig {
  std::string command = "all";  // lemmas | laws | fiber | probe | all
  std::size_t n_lo = 1;
  std::size_t n_hi = 16;
  std::size_t grid = 2;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  std::string candidate = "diagonal";
  std::string format = "text";  // json | csv | text
  std::string out;              // empty: standard output

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct Report {
  std::string tool_version = kToolVersion;
  RunConfig config;
  std::vector<LawReport> suites;
  std::vector<ProbeRow> probe;

  bool passed() const;
  friend bool operator==(const Report&, const Report&) = default;
};

std::string emit_json(const Report& report);
Report parse_json(const std::string& text);
std::string emit_csv(const Report& report);
std::string emit_text(const Report& report);

/// Dispatches on format ("json", "csv" or "text"); rationals are always
/// written as exact "p/q" strings.
std::string emit_report(const Report& report, const std::string& format);

}  // namespace hmkit
