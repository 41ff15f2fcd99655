#include "dhtgb/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

#include "dhtgb/errors.hpp"
#include "dhtgb/guard.hpp"

namespace dhtgb {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Index parse_guard_value(std::string_view field) {
  field = trim(field);
  Index value = 0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || res.ec != std::errc{} ||
      res.ptr != field.data() + field.size()) {
    throw InvalidInput("bad guard value '" + std::string(field) + "'");
  }
  if (value < 0) throw InvalidInput("guard values must be non-negative");
  return value;
}

std::string default_label(const ExperimentConfig& config) {
  if (config.input_samples) return config.input_samples->filename().string();
  return std::string(to_string(config.waveform.kind));
}

}  // namespace

std::vector<Index> default_guards() {
  std::vector<Index> guards;
  for (Index m = 0; m <= 900; m += 10) guards.push_back(m);
  const Index extra[] = {90};
  return merge_guards(std::move(guards), extra);
}

std::vector<Index> parse_guard_spec(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw InvalidInput("guard list is empty");

  std::vector<Index> guards;
  if (text.find(':') != std::string_view::npos) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t pos; (pos = text.find(':', start)) != std::string_view::npos;
         start = pos + 1) {
      parts.push_back(text.substr(start, pos - start));
    }
    parts.push_back(text.substr(start));
    if (parts.size() != 3) {
      throw InvalidInput("guard range must look like lo:hi:step");
    }
    const Index lo = parse_guard_value(parts[0]);
    const Index hi = parse_guard_value(parts[1]);
    const Index step = parse_guard_value(parts[2]);
    if (step <= 0) throw InvalidInput("guard step must be positive");
    if (lo > hi) throw InvalidInput("guard range has lo > hi");
    for (Index m = lo; m <= hi; m += step) guards.push_back(m);
    return guards;
  }

  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(',', start);
    guards.push_back(parse_guard_value(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return guards;
}

std::vector<Index> merge_guards(std::vector<Index> guards, std::span<const Index> extra) {
  guards.insert(guards.end(), extra.begin(), extra.end());
  std::sort(guards.begin(), guards.end());
  guards.erase(std::unique(guards.begin(), guards.end()), guards.end());
  return guards;
}

Signal parse_signal_text(std::string_view text) {
  std::vector<double> values;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t pos = std::min(text.find('\n', start), text.size());
    ++line_no;
    const std::string_view line = trim(text.substr(start, pos - start));
    start = pos + 1;
    if (line.empty() || line.front() == '#') continue;

    double value = 0.0;
    const auto res = std::from_chars(line.data(), line.data() + line.size(), value);
    if (res.ec != std::errc{} || res.ptr != line.data() + line.size() ||
        !std::isfinite(value)) {
      throw InvalidInput("signal file line " + std::to_string(line_no) +
                         ": expected a finite decimal, got '" + std::string(line) +
                         "'");
    }
    values.push_back(value);
  }
  if (values.empty()) throw InvalidInput("signal file contains no samples");
  return Signal(0, Eigen::Map<const Vector<double>>(
                       values.data(), static_cast<Index>(values.size())));
}

Signal read_signal_file(const std::filesystem::path& path) {
  return parse_signal_text(read_text_file(path));
}

void validate(const ExperimentConfig& config) {
  if (config.guards.empty()) throw InvalidInput("guard list is empty");
  if (config.guards.front() != 0) throw InvalidInput("guard list must start at 0");
  if (!std::is_sorted(config.guards.begin(), config.guards.end()) ||
      std::adjacent_find(config.guards.begin(), config.guards.end()) !=
          config.guards.end()) {
    throw InvalidInput("guard list must be strictly ascending");
  }
  if (config.theta && (!(*config.theta > 0.0) || !std::isfinite(*config.theta))) {
    throw InvalidInput("theta must be a positive finite number");
  }
  if (config.output_csv.empty()) throw InvalidInput("an output CSV path is required");
  if (!config.input_samples) dhtgb::validate(config.waveform);
}

ExperimentOutcome run_experiment(const ExperimentConfig& config) {
  validate(config);
  const Signal signal = config.input_samples ? read_signal_file(*config.input_samples)
                                             : generate(config.waveform);

  ExperimentOutcome outcome;
  outcome.table = make_table(sweep(signal, std::span<const Index>(config.guards)),
                             default_label(config), signal.width());
  if (config.theta) {
    outcome.theta_search_limit = config.guards.back();
    outcome.min_guard =
        min_guard_band(signal, *config.theta, outcome.theta_search_limit);
  }

  write_csv(outcome.table, config.output_csv);
  if (config.output_svg) emit_svg(outcome.table, *config.output_svg);
  return outcome;
}

std::vector<SuiteEntry> run_paper_suite(const std::filesystem::path& outdir) {
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) {
    throw IoError("cannot create '" + outdir.string() + "': " + ec.message());
  }

  std::vector<SuiteEntry> entries;
  for (const auto& published : kPublishedRatios) {
    ExperimentConfig config;
    config.waveform.kind = published.kind;
    config.waveform.width = kSuiteWidth;
    const std::string name(to_string(published.kind));
    config.output_csv = outdir / (name + ".csv");
    config.output_svg = outdir / (name + ".svg");

    SuiteEntry entry;
    entry.kind = published.kind;
    entry.table = run_experiment(config).table;
    entry.published_percent = published.percent;
    entry.domain_points_at_width =
        guarded_forward(generate(config.waveform), kSuiteWidth).size();
    const auto row = std::find_if(entry.table.rows.begin(), entry.table.rows.end(),
                                  [](const SweepRow& r) { return r.m == kSuiteWidth; });
    entry.ratio_at_width = row->ratio_percent;
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::string format_suite_summary(std::span<const SuiteEntry> entries) {
  std::string out = "waveform    N   m   points  ratio_%   published_%\n";
  char line[128];
  for (const auto& e : entries) {
    std::snprintf(line, sizeof line, "%-9s %3ld %3ld %6ld  %8.4f  %8.2f\n",
                  std::string(to_string(e.kind)).c_str(),
                  static_cast<long>(e.table.width), static_cast<long>(kSuiteWidth),
                  static_cast<long>(e.domain_points_at_width), e.ratio_at_width,
                  e.published_percent);
    out += line;
  }
  return out;
}

}  // namespace dhtgb
