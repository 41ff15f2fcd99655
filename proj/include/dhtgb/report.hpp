#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dhtgb/guard.hpp"

namespace dhtgb {

struct SweepRow {
  Index m = 0;
  double rms_abs = 0.0;
  double ratio_percent = 0.0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Tabular sweep result as reported: values are held at 12 significant
/// digits, the precision written to CSV.
struct SweepTable {
  std::string label;
  Index width = 0;
  double baseline_rms = 0.0;
  std::vector<SweepRow> rows;
};

/// Rounds to 12 significant digits (the CSV precision).
double round_to_reported(double value);

/// Shortest locale-independent text with at most 12 significant digits.
std::string format_reported(double value);

SweepTable make_table(const GuardSweep& sweep, std::string label, Index width);

inline constexpr std::string_view kCsvHeader = "m,rms_abs,ratio_percent";

std::string format_csv(const SweepTable& table);

/// Parses text produced by format_csv. Throws InvalidInput on malformed text.
std::vector<SweepRow> parse_csv(std::string_view text);

/// Pixel geometry of the ratio plot: linear x over guard width, log10 y over
/// ratio_percent spanning whole decades.
struct PlotFrame {
  double width = 720.0;
  double height = 440.0;
  double left = 80.0;
  double right = 30.0;
  double top = 50.0;
  double bottom = 60.0;
  double x_min = 0.0;
  double x_max = 1.0;
  int decade_lo = 0;
  int decade_hi = 2;

  double x_px(double m) const;
  double y_px(double ratio_percent) const;
  /// Inverse of y_px.
  double ratio_at(double y_pixel) const;
  /// Inverse of x_px.
  double m_at(double x_pixel) const;
};

/// Frame covering every row with a positive ratio. Throws InvalidInput for an
/// empty table.
PlotFrame plot_frame_for(const SweepTable& table);

/// Self-contained SVG document: no scripts, no external references.
std::string render_svg(const SweepTable& table);

/// Writes `contents` to `path`, throwing IoError on failure.
void write_text_file(const std::filesystem::path& path, std::string_view contents);
std::string read_text_file(const std::filesystem::path& path);

void write_csv(const SweepTable& table, const std::filesystem::path& path);
void emit_svg(const SweepTable& table, const std::filesystem::path& path);

}  // namespace dhtgb
