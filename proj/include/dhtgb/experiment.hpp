#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dhtgb/report.hpp"
#include "dhtgb/waveform.hpp"

namespace dhtgb {

/// 0, 10, ..., 900 (90 is on that grid).
std::vector<Index> default_guards();

/// "lo:hi:step" (inclusive) or a comma list "0,10,90". Throws InvalidInput.
std::vector<Index> parse_guard_spec(std::string_view text);

/// Union of both lists, sorted ascending without duplicates.
std::vector<Index> merge_guards(std::vector<Index> guards, std::span<const Index> extra);

/// One finite decimal per line, '#' comment lines and blank lines skipped,
/// origin 0. Throws InvalidInput on malformed text.
Signal parse_signal_text(std::string_view text);
Signal read_signal_file(const std::filesystem::path& path);

struct ExperimentConfig {
  WaveformSpec waveform;
  /// When set, replaces the generated waveform.
  std::optional<std::filesystem::path> input_samples;
  std::vector<Index> guards = default_guards();
  std::optional<double> theta;
  std::filesystem::path output_csv;
  std::optional<std::filesystem::path> output_svg;
};

struct ExperimentOutcome {
  SweepTable table;
  /// Set when theta was given and some guard in [0, max guard] meets it.
  std::optional<Index> min_guard;
  Index theta_search_limit = 0;
};

/// Throws InvalidInput for an unusable config.
void validate(const ExperimentConfig& config);

/// Sweeps the configured signal, writes the CSV (and SVG if requested) and
/// runs the threshold search when theta is set.
ExperimentOutcome run_experiment(const ExperimentConfig& config);

struct SuiteEntry {
  Waveform kind = Waveform::sine;
  SweepTable table;
  /// Ratio at m = width, percent.
  double ratio_at_width = 0.0;
  double published_percent = 0.0;
  /// Transform-domain size N + 2m at m = N.
  Index domain_points_at_width = 0;
};

struct PublishedRatio {
  Waveform kind;
  double percent;
};

/// Error ratios at m = 90 reported for the original N = 90 experiments.
inline constexpr std::array<PublishedRatio, 4> kPublishedRatios{{
    {Waveform::sine, 1.02},
    {Waveform::ramp, 0.62},
    {Waveform::square, 1.6},
    {Waveform::triangle, 1.08},
}};

inline constexpr Index kSuiteWidth = 90;

/// Runs the four canonical waveforms (N = 90, default guards) and writes
/// <kind>.csv and <kind>.svg into outdir, creating it if needed.
std::vector<SuiteEntry> run_paper_suite(const std::filesystem::path& outdir);

std::string format_suite_summary(std::span<const SuiteEntry> entries);

}  // namespace dhtgb
