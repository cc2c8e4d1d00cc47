#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gbi/bannaiito/suites.hpp"

namespace gbi {

inline constexpr const char* kToolName = "bi-verify";
inline constexpr const char* kToolVersion = "1.0.0";

enum class ReportFormat { kJson, kMarkdown };

struct RunConfig {
  RealizationKind realization = RealizationKind::kB3Scalar;
  int degree = 6;
  // Suite names to run; empty selects every suite that applies to the realization.
  std::vector<std::string> suites;
  Assignment params;
  std::optional<std::filesystem::path> out;
  ReportFormat format = ReportFormat::kJson;
  int jobs = 1;
  bool timings = false;  // wall times make the report run-dependent
};

struct VerificationReport {
  RunConfig config;
  std::vector<std::string> selected;  // resolved suite list, report order
  std::vector<SuiteReport> suites;

  bool passed() const;
  std::size_t identity_count() const;
  std::size_t failure_count() const;
};

std::string render_json(const VerificationReport& report);
std::string render_markdown(const VerificationReport& report);
std::string render(const VerificationReport& report, ReportFormat format);

// Writes to a sibling temporary file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace gbi
