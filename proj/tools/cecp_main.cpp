// cecp: command-line front end for the entropy-complexity pipeline.
//
//   cecp run      --input libor=libor.csv --input ois=ois.csv --out results/
//   cecp window   --input libor.csv
//   cecp bounds   --embedding-dimension 4 --curve upper
//   cecp generate --kind ar1 --phi 0.99 --length 3996 --out ar1.csv

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cecp/bounds.hpp"
#include "cecp/csv.hpp"
#include "cecp/errors.hpp"
#include "cecp/pipeline.hpp"
#include "cecp/report.hpp"
#include "cecp/synthetic.hpp"
#include "cecp/window.hpp"

namespace {

using namespace cecp;

struct WindowFlags {
  int dimension = 4;
  int delay = 1;
  std::size_t window_length = 300;
  std::size_t step = 20;
  std::size_t max_windows = 0;

  CLI::Option* dimension_opt = nullptr;
  CLI::Option* delay_opt = nullptr;
  CLI::Option* length_opt = nullptr;
  CLI::Option* step_opt = nullptr;
  CLI::Option* max_opt = nullptr;

  void add(CLI::App& app) {
    dimension_opt = app.add_option("-D,--embedding-dimension", dimension, "Pattern length D")
                        ->check(CLI::Range(kMinDimension, kMaxDimension));
    delay_opt = app.add_option("--embedding-delay", delay, "Embedding delay tau")
                    ->check(CLI::PositiveNumber);
    length_opt = app.add_option("--window-length", window_length, "Rows per window");
    step_opt = app.add_option("--step", step, "Rows between window starts");
    max_opt = app.add_option("--max-windows", max_windows, "Keep at most this many windows");
  }

  void apply(WindowSpec& spec) const {
    if (dimension_opt->count()) spec.ordinal.dimension = dimension;
    if (delay_opt->count()) spec.ordinal.delay = delay;
    if (length_opt->count()) spec.window_length = window_length;
    if (step_opt->count()) spec.step = step;
    if (max_opt->count()) spec.max_windows = max_windows;
  }
};

void warn(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  fn(out);
}

SeriesInput parse_input(const std::string& text, const std::string& date_column,
                        const std::string& value_column) {
  SeriesInput input{"", "", date_column, value_column};
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    input.path = text;
    input.name = input.path.stem().string();
  } else {
    input.name = text.substr(0, eq);
    input.path = text.substr(eq + 1);
  }
  return input;
}

int run_main(int argc, char** argv) {
  CLI::App app{"Entropy-complexity analysis of time series"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Full pipeline over one or more CSV series");
  std::vector<std::string> inputs;
  std::string config_path, date_column = "date", value_column = "value", reference, out_dir,
                           format = "csv";
  std::vector<std::uint64_t> seeds;
  bool difference = false;
  std::size_t subsample = 4, bounds_grid = kDefaultBoundsGrid;
  unsigned threads = 1;
  WindowFlags run_window;
  run->add_option("-i,--input", inputs, "Series as name=path (name defaults to the file stem)");
  auto* config_opt = run->add_option("-c,--config", config_path,
                                     "JSON config or a previous metadata.json")
                         ->check(CLI::ExistingFile);
  auto* date_opt = run->add_option("--date-column", date_column, "Date column ('' for none)");
  auto* value_opt = run->add_option("--value-column", value_column, "Value column");
  run_window.add(*run);
  auto* seeds_opt = run->add_option("--seeds", seeds, "Shuffle surrogate seeds");
  auto* ref_opt = run->add_option("--reference", reference, "Series the F-tests compare against");
  auto* out_opt = run->add_option("-o,--out", out_dir, "Output directory");
  auto* format_opt =
      run->add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  auto* diff_flag = run->add_flag("--difference", difference, "Analyse first differences");
  auto* sub_opt = run->add_option("--subsample-ratio", subsample, "Keep every k-th window in the scheme file");
  auto* grid_opt = run->add_option("--bounds-grid", bounds_grid, "Samples per bounds curve");
  auto* threads_opt = run->add_option("-j,--threads", threads, "Worker threads")
                          ->check(CLI::PositiveNumber);

  // window
  auto* window = app.add_subcommand("window", "Print the windowed (S, H, C) trajectory of one CSV");
  std::string window_input, window_out, window_date = "date", window_value = "value";
  bool window_difference = false;
  WindowFlags window_flags;
  window->add_option("-i,--input", window_input, "CSV file")->required()->check(CLI::ExistingFile);
  window->add_option("--date-column", window_date, "Date column ('' for none)");
  window->add_option("--value-column", window_value, "Value column");
  window->add_flag("--difference", window_difference, "Analyse first differences");
  window_flags.add(*window);
  window->add_option("-o,--out", window_out, "Output file (default stdout)");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Print a complexity bound curve for M = D!");
  int bounds_dimension = 4;
  std::size_t grid = kDefaultBoundsGrid;
  std::string curve = "lower", bounds_out;
  bounds->add_option("-D,--embedding-dimension", bounds_dimension, "Pattern length D")
      ->check(CLI::Range(kMinDimension, kMaxDimension));
  bounds->add_option("--grid", grid, "Uniform entropy samples");
  bounds->add_option("--curve", curve, "Which curve")->check(CLI::IsMember({"lower", "upper"}));
  bounds->add_option("-o,--out", bounds_out, "Output file (default stdout)");

  // generate
  auto* generate = app.add_subcommand("generate", "Write a synthetic series as date,value CSV");
  std::string kind = "noise", generate_out, start = "1999-05-17";
  std::size_t length = 3996;
  std::uint64_t seed = 1;
  double phi = 0.99, slope = 1.0;
  generate->add_option("--kind", kind, "Series type")
      ->check(CLI::IsMember({"noise", "gaussian", "ramp", "ar1"}));
  generate->add_option("-n,--length", length, "Rows")->check(CLI::PositiveNumber);
  generate->add_option("--seed", seed, "Generator seed");
  generate->add_option("--phi", phi, "AR(1) coefficient");
  generate->add_option("--slope", slope, "Ramp increment per row");
  generate->add_option("--start-date", start, "First weekday, YYYY-MM-DD");
  generate->add_option("-o,--out", generate_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::kConfig);
  }

  if (*run) {
    RunConfig config = config_opt->count() ? load_run_config(config_path) : RunConfig{};
    for (auto& input : config.inputs) {
      if (date_opt->count()) input.date_column = date_column;
      if (value_opt->count()) input.value_column = value_column;
    }
    if (!inputs.empty()) {
      config.inputs.clear();
      for (const auto& text : inputs) {
        config.inputs.push_back(parse_input(text, date_column, value_column));
      }
    }
    run_window.apply(config.window);
    if (seeds_opt->count()) config.seeds = seeds;
    if (ref_opt->count()) config.reference = reference;
    if (out_opt->count()) config.output_dir = out_dir;
    if (format_opt->count()) config.format = parse_report_format(format);
    if (diff_flag->count()) config.difference = difference;
    if (sub_opt->count()) config.subsample_ratio = subsample;
    if (grid_opt->count()) config.bounds_grid = bounds_grid;
    if (threads_opt->count()) config.threads = threads;
    if (config.output_dir.empty()) throw ConfigError("no output directory (use --out)");

    const auto summary = run_pipeline(config);
    warn(summary.warnings);
    for (const auto& path : summary.files) std::cout << path.string() << '\n';
  } else if (*window) {
    auto series = ingest_csv(window_input, window_date, window_value);
    if (window_difference) series = series.first_difference();
    WindowSpec spec;
    window_flags.apply(spec);
    warn(spec.validate());
    const auto trajectory = slide(series, spec);
    with_output(window_out, [&](std::ostream& os) { write_trajectory_csv(os, trajectory); });
  } else if (*bounds) {
    const auto m = factorial(bounds_dimension);
    const auto points =
        curve == "lower" ? min_complexity_curve(m, grid) : max_complexity_curve(m, grid);
    with_output(bounds_out, [&](std::ostream& os) { write_curve_csv(os, points); });
  } else if (*generate) {
    unsigned y = 0, m = 0, d = 0;
    if (std::sscanf(start.c_str(), "%4u-%2u-%2u", &y, &m, &d) != 3) {
      throw ConfigError("--start-date must be YYYY-MM-DD, got '" + start + "'");
    }
    TimeSeries series = kind == "noise"      ? synthetic::white_noise(length, seed)
                        : kind == "gaussian" ? synthetic::gaussian_noise(length, seed)
                        : kind == "ramp"     ? synthetic::ramp(length, 0.0, slope)
                                             : synthetic::ar1(length, phi, seed);
    const auto labels = synthetic::business_day_labels(length, static_cast<int>(y), m, d);
    with_output(generate_out, [&](std::ostream& os) {
      os << "date,value\n";
      for (std::size_t i = 0; i < series.size(); ++i) {
        os << labels[i] << ',' << format_full(series.values()[i]) << '\n';
      }
    });
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const cecp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(cecp::exit_code(e));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(cecp::ExitCode::kUnexpected);
  }
}
