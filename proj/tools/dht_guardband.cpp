// dht-guardband: guard-band sweeps for the non-periodic discrete Hilbert
// transform.
//
// Exit codes: 0 success, 1 usage/config error, 2 I/O error, 3 degenerate
// baseline (the zero-guard reconstruction is already exact).

#include <CLI11.hpp>

#include <array>
#include <iostream>
#include <optional>
#include <string>

#include "dhtgb/errors.hpp"
#include "dhtgb/experiment.hpp"
#include "dhtgb/guard.hpp"
#include "dhtgb/report.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kDegenerate = 3 };

constexpr const char* kSignalFileHelp =
    "Signal file: UTF-8 text, one finite decimal amplitude per line, lines "
    "starting with '#' and blank lines ignored; the first sample sits at index 0.";

void print_outcome(const dhtgb::ExperimentOutcome& outcome,
                   const std::optional<double>& theta) {
  const auto& table = outcome.table;
  std::cout << table.label << ": N = " << table.width
            << ", zero-guard RMS error = " << dhtgb::format_reported(table.baseline_rms)
            << '\n';
  for (const auto& row : table.rows) {
    if (row.m == table.width) {
      std::cout << "  m = " << row.m << " (" << table.width + 2 * row.m
                << " transform points): " << dhtgb::format_reported(row.ratio_percent)
                << "% of zero-guard error\n";
    }
  }
  if (theta) {
    if (outcome.min_guard) {
      std::cout << "min guard band for theta = " << dhtgb::format_reported(*theta)
                << ": " << *outcome.min_guard << '\n';
    } else {
      std::cout << "no guard band in [0, " << outcome.theta_search_limit
                << "] reaches theta = " << dhtgb::format_reported(*theta) << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Guard-band experiments for the non-periodic discrete Hilbert transform"};
  app.require_subcommand(1);

  // sweep
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "RMS reconstruction error vs guard band for one signal");
  std::string waveform_name = "sine";
  std::string polarity_name = "bipolar";
  dhtgb::ExperimentConfig config;
  std::string guards_text = "0:900:10";
  std::vector<dhtgb::Index> extra_guards;
  std::string csv_path;
  std::string svg_path;
  std::string input_path;
  double theta = 0.0;

  auto* waveform_opt =
      sweep_cmd->add_option("--waveform", waveform_name, "sine|ramp|square|triangle")
          ->check(CLI::IsMember({"sine", "ramp", "square", "triangle"}));
  sweep_cmd->add_option("--width", config.waveform.width, "signal width N")
      ->capture_default_str();
  sweep_cmd->add_option("--amplitude", config.waveform.amplitude)->capture_default_str();
  sweep_cmd->add_option("--periods", config.waveform.periods,
                        "cycles over the width (sine, square, triangle)")
      ->capture_default_str();
  sweep_cmd->add_option("--polarity", polarity_name,
                        "ramp/triangle variant: bipolar (zero mean) or unipolar")
      ->check(CLI::IsMember({"bipolar", "unipolar"}))
      ->capture_default_str();
  sweep_cmd->add_option("--guards", guards_text, "lo:hi:step or comma list")
      ->capture_default_str();
  sweep_cmd->add_option("--extra", extra_guards, "additional guard values")
      ->delimiter(',');
  sweep_cmd->add_option("--csv", csv_path, "output CSV (m,rms_abs,ratio_percent)")
      ->required();
  sweep_cmd->add_option("--svg", svg_path, "output SVG plot");
  auto* theta_opt = sweep_cmd->add_option(
      "--theta", theta, "report the smallest guard with RMS error below this");
  sweep_cmd->add_option("--input", input_path, std::string("signal file; ") + kSignalFileHelp)
      ->excludes(waveform_opt);

  // paper-suite
  auto* suite_cmd = app.add_subcommand(
      "paper-suite", "sine, ramp, square and triangle at N = 90, guards 0..900");
  std::string outdir = "results";
  suite_cmd->add_option("--outdir", outdir, "directory for CSV and SVG files")
      ->capture_default_str();

  // transform
  auto* transform_cmd = app.add_subcommand(
      "transform", "forward + inverse round trip of a signal file with one guard width");
  std::string transform_input;
  dhtgb::Index transform_guard = 0;
  std::string transform_csv;
  transform_cmd->add_option("--input", transform_input, kSignalFileHelp)->required();
  transform_cmd->add_option("--guard", transform_guard, "guard points per side")
      ->required()
      ->check(CLI::NonNegativeNumber);
  transform_cmd->add_option("--csv", transform_csv, "output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sweep_cmd) {
      config.waveform.kind = *dhtgb::parse_waveform(waveform_name);
      config.waveform.polarity = *dhtgb::parse_polarity(polarity_name);
      config.guards =
          dhtgb::merge_guards(dhtgb::parse_guard_spec(guards_text), extra_guards);
      config.output_csv = csv_path;
      if (!svg_path.empty()) config.output_svg = svg_path;
      if (!input_path.empty()) config.input_samples = input_path;
      if (*theta_opt) config.theta = theta;
      print_outcome(dhtgb::run_experiment(config), config.theta);
    } else if (*suite_cmd) {
      const auto entries = dhtgb::run_paper_suite(outdir);
      std::cout << dhtgb::format_suite_summary(entries);
      std::cout << "wrote " << entries.size() << " CSV/SVG pairs to " << outdir << '\n';
    } else if (*transform_cmd) {
      dhtgb::ExperimentConfig rt;
      rt.input_samples = transform_input;
      rt.guards = dhtgb::merge_guards({0}, std::array{transform_guard});
      rt.output_csv = transform_csv;
      const auto outcome = dhtgb::run_experiment(rt);
      const auto& last = outcome.table.rows.back();
      std::cout << outcome.table.label << ": N = " << outcome.table.width
                << ", guard " << last.m << " per side ("
                << outcome.table.width + 2 * last.m << " transform points)\n"
                << "  rms error " << dhtgb::format_reported(last.rms_abs) << " ("
                << dhtgb::format_reported(last.ratio_percent)
                << "% of zero-guard error "
                << dhtgb::format_reported(outcome.table.baseline_rms) << ")\n";
    }
  } catch (const dhtgb::DegenerateBaseline& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const dhtgb::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const dhtgb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
