#include "dhtgb/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <locale>
#include <sstream>
#include <system_error>

#include "dhtgb/errors.hpp"

namespace dhtgb {

namespace {

constexpr int kReportedDigits = 12;

std::string to_chars_string(double value, std::chars_format fmt, int precision) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, fmt,
                                 precision);
  return std::string(buf.data(), res.ptr);
}

// Pixel coordinates with two decimals.
std::string px(double value) {
  return to_chars_string(value, std::chars_format::fixed, 2);
}

double parse_double(std::string_view field) {
  double value = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size() ||
      !std::isfinite(value)) {
    throw InvalidInput("csv: bad number '" + std::string(field) + "'");
  }
  return value;
}

Index parse_index(std::string_view field) {
  Index value = 0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw InvalidInput("csv: bad integer '" + std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

// 1, 2 or 5 times a power of ten, giving at most ~10 intervals over `span`.
double tick_step(double span) {
  const double raw = span / 10.0;
  const double base = std::pow(10.0, std::floor(std::log10(raw)));
  for (double mult : {1.0, 2.0, 5.0, 10.0}) {
    if (base * mult >= raw) return base * mult;
  }
  return base * 10.0;
}

}  // namespace

double round_to_reported(double value) {
  return parse_double(format_reported(value));
}

std::string format_reported(double value) {
  return to_chars_string(value, std::chars_format::general, kReportedDigits);
}

SweepTable make_table(const GuardSweep& sweep, std::string label, Index width) {
  SweepTable table;
  table.label = std::move(label);
  table.width = width;
  table.baseline_rms = round_to_reported(sweep.baseline_rms);
  table.rows.reserve(sweep.rows.size());
  for (const auto& row : sweep.rows) {
    table.rows.push_back({row.guard, round_to_reported(row.rms_abs),
                          round_to_reported(100.0 * row.rms_ratio_to_zero_guard)});
  }
  return table;
}

std::string format_csv(const SweepTable& table) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& row : table.rows) {
    out += std::to_string(row.m);
    out += ',';
    out += format_reported(row.rms_abs);
    out += ',';
    out += format_reported(row.ratio_percent);
    out += '\n';
  }
  return out;
}

std::vector<SweepRow> parse_csv(std::string_view text) {
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kCsvHeader) {
    throw InvalidInput("csv: missing header '" + std::string(kCsvHeader) + "'");
  }
  std::vector<SweepRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split(lines[i], ',');
    if (fields.size() != 3) {
      throw InvalidInput("csv: line " + std::to_string(i + 1) +
                         " does not have 3 fields");
    }
    rows.push_back({parse_index(fields[0]), parse_double(fields[1]),
                    parse_double(fields[2])});
  }
  return rows;
}

double PlotFrame::x_px(double m) const {
  const double plot_w = width - left - right;
  return left + (m - x_min) / (x_max - x_min) * plot_w;
}

double PlotFrame::y_px(double ratio_percent) const {
  const double plot_h = height - top - bottom;
  const double t = (std::log10(ratio_percent) - decade_lo) / (decade_hi - decade_lo);
  return top + (1.0 - t) * plot_h;
}

double PlotFrame::ratio_at(double y_pixel) const {
  const double plot_h = height - top - bottom;
  const double t = 1.0 - (y_pixel - top) / plot_h;
  return std::pow(10.0, decade_lo + t * (decade_hi - decade_lo));
}

double PlotFrame::m_at(double x_pixel) const {
  const double plot_w = width - left - right;
  return x_min + (x_pixel - left) / plot_w * (x_max - x_min);
}

PlotFrame plot_frame_for(const SweepTable& table) {
  if (table.rows.empty()) throw InvalidInput("cannot plot an empty sweep");
  PlotFrame frame;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& row : table.rows) {
    frame.x_max = std::max(frame.x_max, static_cast<double>(row.m));
    if (row.ratio_percent > 0.0) {
      lo = std::min(lo, row.ratio_percent);
      hi = std::max(hi, row.ratio_percent);
    }
  }
  if (hi > 0.0) {
    frame.decade_lo = static_cast<int>(std::floor(std::log10(lo)));
    frame.decade_hi = static_cast<int>(std::ceil(std::log10(hi)));
  }
  if (frame.decade_hi <= frame.decade_lo) frame.decade_hi = frame.decade_lo + 1;
  return frame;
}

std::string render_svg(const SweepTable& table) {
  const PlotFrame f = plot_frame_for(table);
  const double x0 = f.left;
  const double x1 = f.width - f.right;
  const double y0 = f.top;
  const double y1 = f.height - f.bottom;

  std::ostringstream svg;
  svg.imbue(std::locale::classic());
  svg << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n'
      << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << px(f.width)
      << R"(" height=")" << px(f.height) << R"(" viewBox="0 0 )" << px(f.width)
      << ' ' << px(f.height) << R"(" font-family="sans-serif" font-size="12">)"
      << '\n';
  svg << R"(  <rect x="0" y="0" width=")" << px(f.width) << R"(" height=")"
      << px(f.height) << R"(" fill="white"/>)" << '\n';
  svg << R"(  <text x=")" << px(f.width / 2) << R"(" y="28" text-anchor="middle" font-size="15">)"
      << xml_escape(table.label) << ", N = " << table.width
      << ": RMS error ratio vs guard band</text>\n";

  // Decade grid on the log axis.
  svg << R"(  <g stroke="#dddddd" stroke-width="1">)" << '\n';
  for (int d = f.decade_lo; d <= f.decade_hi; ++d) {
    const double y = f.y_px(std::pow(10.0, d));
    svg << R"(    <line x1=")" << px(x0) << R"(" y1=")" << px(y) << R"(" x2=")"
        << px(x1) << R"(" y2=")" << px(y) << R"("/>)" << '\n';
  }
  svg << "  </g>\n";
  for (int d = f.decade_lo; d <= f.decade_hi; ++d) {
    const double y = f.y_px(std::pow(10.0, d));
    svg << R"(  <text x=")" << px(x0 - 8) << R"(" y=")" << px(y + 4)
        << R"(" text-anchor="end">)"
        << to_chars_string(std::pow(10.0, d), std::chars_format::general, 6)
        << "</text>\n";
  }

  const double step = tick_step(f.x_max - f.x_min);
  for (double t = f.x_min; t <= f.x_max + 1e-9 * step; t += step) {
    const double x = f.x_px(t);
    svg << R"(  <line x1=")" << px(x) << R"(" y1=")" << px(y1) << R"(" x2=")"
        << px(x) << R"(" y2=")" << px(y1 + 5) << R"(" stroke="black"/>)" << '\n';
    svg << R"(  <text x=")" << px(x) << R"(" y=")" << px(y1 + 20)
        << R"(" text-anchor="middle">)"
        << to_chars_string(t, std::chars_format::general, 6) << "</text>\n";
  }

  svg << R"(  <rect x=")" << px(x0) << R"(" y=")" << px(y0) << R"(" width=")"
      << px(x1 - x0) << R"(" height=")" << px(y1 - y0)
      << R"(" fill="none" stroke="black"/>)" << '\n';
  svg << R"(  <text x=")" << px((x0 + x1) / 2) << R"(" y=")" << px(f.height - 15)
      << R"(" text-anchor="middle">guard band m (points per side)</text>)" << '\n';
  svg << R"(  <text x="20" y=")" << px((y0 + y1) / 2)
      << R"(" text-anchor="middle" transform="rotate(-90 20 )" << px((y0 + y1) / 2)
      << R"lit()">RMS error, % of zero-guard error (log)</text>)lit" << '\n';

  std::string points;
  for (const auto& row : table.rows) {
    if (row.ratio_percent <= 0.0) continue;
    if (!points.empty()) points += ' ';
    points += px(f.x_px(static_cast<double>(row.m))) + ',' +
              px(f.y_px(row.ratio_percent));
  }
  if (!points.empty()) {
    svg << R"(  <polyline fill="none" stroke="#1f77b4" stroke-width="1.5" points=")"
        << points << R"("/>)" << '\n';
  }
  svg << R"(  <g fill="#1f77b4">)" << '\n';
  for (const auto& row : table.rows) {
    if (row.ratio_percent <= 0.0) continue;
    svg << R"(    <circle cx=")" << px(f.x_px(static_cast<double>(row.m)))
        << R"(" cy=")" << px(f.y_px(row.ratio_percent)) << R"(" r="2.5"><title>m = )"
        << row.m << ": " << format_reported(row.ratio_percent)
        << "%</title></circle>\n";
  }
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return buf.str();
}

void write_csv(const SweepTable& table, const std::filesystem::path& path) {
  write_text_file(path, format_csv(table));
}

void emit_svg(const SweepTable& table, const std::filesystem::path& path) {
  write_text_file(path, render_svg(table));
}

}  // namespace dhtgb
