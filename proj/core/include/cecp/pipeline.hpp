#pragma once

// End-to-end run: ingest every input, slide windows, shuffle surrogates,
// summarize entropies across series and write the plot-ready files.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cecp/report.hpp"
#include "cecp/window.hpp"

namespace cecp {

struct SeriesInput {
  std::string name;
  std::filesystem::path path;
  std::string date_column = "date";
  std::string value_column = "value";
};

enum class ReportFormat { kCsv, kJson };

struct RunConfig {
  std::vector<SeriesInput> inputs;
  WindowSpec window{};
  bool difference = false;  // analyse x_t - x_{t-1} instead of levels
  std::vector<std::uint64_t> seeds{1};
  std::optional<std::string> reference;
  std::filesystem::path output_dir;
  ReportFormat format = ReportFormat::kCsv;
  std::size_t subsample_ratio = 4;
  std::size_t bounds_grid = kDefaultBoundsGrid;
  unsigned threads = 1;

  // Throws ConfigError (or PreconditionError for window parameters).
  // Returns non-fatal warnings.
  std::vector<std::string> validate() const;
};

// The config file / metadata schema. Keys mirror the CLI flags:
//   inputs: [{name, path, date-column, value-column}], embedding-dimension,
//   embedding-delay, window-length, step, max-windows, difference, seeds,
//   reference, output-dir, format, subsample-ratio, bounds-grid, threads.
// Every key except inputs is optional. Throws ConfigError on bad input.
RunConfig run_config_from_json(std::string_view text);
RunConfig load_run_config(const std::filesystem::path& path);
// output-dir is omitted so that metadata from two output directories of
// the same run compare equal.
std::string run_config_to_json(const RunConfig& config);

std::string_view to_string(ReportFormat format);
ReportFormat parse_report_format(std::string_view text);

struct SeriesRun {
  std::string name;
  std::string sha256;  // digest of the input file bytes
  std::size_t rows = 0;
  Trajectory trajectory;
  std::vector<SurrogateRun> surrogates;
};

struct RunSummary {
  std::vector<SeriesRun> series;
  EntropyReport report;
  std::vector<std::filesystem::path> files;  // written, in order
  std::vector<std::string> warnings;
};

// Files written to output_dir (created if absent):
//   <name>_trajectory.csv, <name>_cecp.csv, <name>_entropy.csv,
//   <name>_scheme.csv, <name>_surrogate.csv   per series
//   bounds_lower.csv, bounds_upper.csv        for M = D!
//   report.csv | report.json                  cross-series entropy table
//   metadata.json                             config, engine, input digests
// Any failure is rethrown with the failing series and stage prepended.
// Throws InvariantError if a window falls outside the complexity bounds.
RunSummary run_pipeline(const RunConfig& config);

std::string sha256_hex(std::string_view bytes);

}  // namespace cecp
