#pragma once

// Runs the checker suites on a spec and renders the reports.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "skewverify/report.hpp"
#include "skewverify/spec_io.hpp"

namespace skewverify {

enum class OutputFormat { human, json };

struct SuiteConfig {
  /// bialgebra, cobraiding, y-axioms, skew, braiding, derived, closed,
  /// comodules, multicat, roundtrip or all.
  std::string suite = "all";
  std::array<std::size_t, 4> probe_dims{1, 1, 1, 1};
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::human;
  std::size_t jobs = 1;
  /// Adds elapsed_ms to reports; off keeps output byte-for-byte reproducible.
  bool timing = false;
};

/// Probe generators above this dimension make the closed suite impractical.
inline constexpr std::size_t kMaxProbeDim = 3;

const std::vector<std::string>& suite_ids();

struct SuiteRun {
  std::vector<AxiomReport> reports;
  std::vector<double> elapsed_ms;  // per report
  int exit_code = 0;
};

/// Throws ValidationError on a bad config or a suite that needs r when the
/// spec has none. Under "all", suites that need r are skipped without it.
SuiteRun run_suite(const BialgebraSpec& spec, const SuiteConfig& cfg);

std::string render_json(const BialgebraSpec& spec, const SuiteConfig& cfg, const SuiteRun& run);
std::string render_human(const BialgebraSpec& spec, const SuiteConfig& cfg, const SuiteRun& run);

/// 3 if any report is inconsistent, else 1 if any required law failed, else 0.
int combined_exit_code(const std::vector<AxiomReport>& reports);

}  // namespace skewverify
