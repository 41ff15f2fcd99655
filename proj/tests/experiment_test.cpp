#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <string>

#include "dhtgb/errors.hpp"
#include "dhtgb/experiment.hpp"
#include "support/xml_check.hpp"

using namespace dhtgb;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("dhtgb_experiment_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("default guards: 0..900 step 10, including 90") {
  const auto g = default_guards();
  CHECK(g.size() == 91);
  CHECK(g.front() == 0);
  CHECK(g.back() == 900);
  CHECK(std::binary_search(g.begin(), g.end(), Index(90)));
  CHECK(std::is_sorted(g.begin(), g.end()));
}

TEST_CASE("parse_guard_spec") {
  CHECK(parse_guard_spec("0:30:10") == std::vector<Index>{0, 10, 20, 30});
  CHECK(parse_guard_spec("0:25:10") == std::vector<Index>{0, 10, 20});
  CHECK(parse_guard_spec("0,90") == std::vector<Index>{0, 90});
  CHECK(parse_guard_spec(" 5 ") == std::vector<Index>{5});
  CHECK_THROWS_AS(parse_guard_spec(""), InvalidInput);
  CHECK_THROWS_AS(parse_guard_spec("0:10"), InvalidInput);
  CHECK_THROWS_AS(parse_guard_spec("0:10:0"), InvalidInput);
  CHECK_THROWS_AS(parse_guard_spec("10:0:1"), InvalidInput);
  CHECK_THROWS_AS(parse_guard_spec("0,-5"), InvalidInput);
  CHECK_THROWS_AS(parse_guard_spec("0,,5"), InvalidInput);
  CHECK_THROWS_AS(parse_guard_spec("a"), InvalidInput);
}

TEST_CASE("merge_guards sorts and removes duplicates") {
  const Index extra[] = {90, 5, 0};
  CHECK(merge_guards({0, 10, 90, 100}, extra) == std::vector<Index>{0, 5, 10, 90, 100});
}

TEST_CASE("signal text parsing") {
  const auto s = parse_signal_text("# header\n1.5\n\n-2e-1\n  3  \n# trailing\n");
  CHECK(s.origin() == 0);
  REQUIRE(s.width() == 3);
  CHECK(s.samples()[0] == 1.5);
  CHECK(s.samples()[1] == -0.2);
  CHECK(s.samples()[2] == 3.0);
  CHECK(parse_signal_text("1\r\n2\r\n").width() == 2);
  CHECK_THROWS_AS(parse_signal_text("# nothing\n"), InvalidInput);
  CHECK_THROWS_AS(parse_signal_text("1\nabc\n"), InvalidInput);
  CHECK_THROWS_AS(parse_signal_text("1\ninf\n"), InvalidInput);
  CHECK_THROWS_AS(parse_signal_text("1\nnan\n"), InvalidInput);
  CHECK_THROWS_AS(parse_signal_text("1 2\n"), InvalidInput);
  CHECK_THROWS_AS(read_signal_file("/nonexistent-dir/signal.txt"), IoError);
}

TEST_CASE("run_experiment writes CSV and SVG for the sine") {
  const fs::path dir = scratch_dir("sine");
  ExperimentConfig config;
  config.guards = {0, 90};
  config.output_csv = dir / "sine.csv";
  config.output_svg = dir / "sine.svg";
  const auto outcome = run_experiment(config);

  REQUIRE(outcome.table.rows.size() == 2);
  CHECK(outcome.table.rows[0].ratio_percent == 100.0);
  CHECK(outcome.table.rows[1].ratio_percent == doctest::Approx(1.0).epsilon(0.05));
  CHECK(parse_csv(read_text_file(config.output_csv)) == outcome.table.rows);
  CHECK(testing::xml_error(read_text_file(*config.output_svg)).empty());
  CHECK_FALSE(outcome.min_guard.has_value());
}

TEST_CASE("run_experiment threshold search") {
  const fs::path dir = scratch_dir("theta");
  ExperimentConfig config;
  config.guards = {0, 90};
  config.output_csv = dir / "out.csv";
  config.theta = 0.02 * 0.0998387817620602;  // 2% of the sine's zero-guard error
  const auto outcome = run_experiment(config);
  CHECK(outcome.theta_search_limit == 90);
  REQUIRE(outcome.min_guard.has_value());
  CHECK(*outcome.min_guard == 64);

  config.theta = 1e-12;
  CHECK_FALSE(run_experiment(config).min_guard.has_value());
}

TEST_CASE("run_experiment with a signal file") {
  const fs::path dir = scratch_dir("file");
  write_text_file(dir / "samples.txt", "# ramp\n0\n1\n2\n3\n2\n1\n");
  ExperimentConfig config;
  config.input_samples = dir / "samples.txt";
  config.guards = {0, 6};
  config.output_csv = dir / "out.csv";
  const auto outcome = run_experiment(config);
  CHECK(outcome.table.label == "samples.txt");
  CHECK(outcome.table.width == 6);
  CHECK(outcome.table.rows[1].ratio_percent < 100.0);

  write_text_file(dir / "zero.txt", "0\n0\n0\n");
  config.input_samples = dir / "zero.txt";
  CHECK_THROWS_AS(run_experiment(config), DegenerateBaseline);
}

TEST_CASE("invalid configs are rejected before any output") {
  const fs::path dir = scratch_dir("invalid");
  ExperimentConfig config;
  config.output_csv = dir / "out.csv";

  config.guards = {};
  CHECK_THROWS_AS(run_experiment(config), InvalidInput);
  config.guards = {10, 20};
  CHECK_THROWS_AS(run_experiment(config), InvalidInput);
  config.guards = {0, 20, 20};
  CHECK_THROWS_AS(run_experiment(config), InvalidInput);
  config.guards = {0, 10};
  config.theta = -1.0;
  CHECK_THROWS_AS(run_experiment(config), InvalidInput);
  config.theta.reset();
  config.waveform.width = 1;
  CHECK_THROWS_AS(run_experiment(config), InvalidInput);
  CHECK_FALSE(fs::exists(config.output_csv));

  config.waveform.width = 90;
  config.output_csv = "/nonexistent-dir/out.csv";
  CHECK_THROWS_AS(run_experiment(config), IoError);
}

TEST_CASE("paper suite: files, ordering and determinism") {
  const fs::path a = scratch_dir("suite_a");
  const fs::path b = scratch_dir("suite_b");
  const auto first = run_paper_suite(a);
  const auto second = run_paper_suite(b);
  REQUIRE(first.size() == 4);

  double square = 0.0;
  double others = 0.0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    const auto& e = first[i];
    const std::string name(to_string(e.kind));
    CHECK(e.domain_points_at_width == 270);
    CHECK(e.table.rows.size() == 91);
    CHECK(e.ratio_at_width > 0.0);
    CHECK(e.ratio_at_width < 2.0);
    if (e.kind == Waveform::square) square = e.ratio_at_width;
    else others = std::max(others, e.ratio_at_width);
    CHECK(read_text_file(a / (name + ".csv")) == read_text_file(b / (name + ".csv")));
    CHECK(testing::xml_error(read_text_file(a / (name + ".svg"))).empty());
    CHECK(second[i].table.rows == e.table.rows);
  }
  CHECK(square > others);

  const std::string summary = format_suite_summary(first);
  CHECK(summary.find("square") != std::string::npos);
  CHECK(summary.find("1.60") != std::string::npos);
}
