#include "cecp/pipeline.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "cecp/csv.hpp"
#include "cecp/errors.hpp"
#include "cecp/surrogate.hpp"

namespace cecp {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void rethrow_with_context(const Error& e, const std::string& context) {
  const std::string what = context + ": " + e.what();
  if (dynamic_cast<const InvariantError*>(&e)) throw InvariantError(what);
  if (dynamic_cast<const ConfigError*>(&e)) throw ConfigError(what);
  if (dynamic_cast<const PreconditionError*>(&e)) throw PreconditionError(what);
  if (dynamic_cast<const DataError*>(&e)) throw DataError(what);
  if (dynamic_cast<const DomainError*>(&e)) throw DomainError(what);
  if (dynamic_cast<const ShapeError*>(&e)) throw ShapeError(what);
  throw Error(what);
}

template <typename Fn>
auto in_stage(const std::string& series, const char* stage, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    rethrow_with_context(e, "series '" + series + "', " + stage);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void check_bounds(const Trajectory& trajectory, const BoundsCurve& bounds) {
  for (const auto& r : trajectory.results) {
    if (!in_bounds(r.quantifiers, bounds)) {
      throw InvariantError("window " + std::to_string(r.index) + " at (H, C) = (" +
                           format_full(r.quantifiers.normalized_entropy) + ", " +
                           format_full(r.quantifiers.complexity) +
                           ") lies outside the complexity bounds");
    }
  }
}

bool valid_series_name(const std::string& name) {
  if (name.empty() || name == "." || name == "..") return false;
  for (char c : name) {
    if (c == '/' || c == '\\' || c == '\0') return false;
  }
  return true;
}

template <typename T>
T get_or(const Json& doc, const char* key, T fallback) {
  const auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

std::string_view to_string(ReportFormat format) {
  return format == ReportFormat::kJson ? "json" : "csv";
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "json") return ReportFormat::kJson;
  throw ConfigError("unknown output format '" + std::string(text) +
                    "' (expected csv or json)");
}

std::vector<std::string> RunConfig::validate() const {
  if (inputs.empty()) throw ConfigError("no input series given");
  std::set<std::string> names;
  for (const auto& input : inputs) {
    if (!valid_series_name(input.name)) {
      throw ConfigError("series name '" + input.name +
                        "' is empty or contains a path separator");
    }
    if (!names.insert(input.name).second) {
      throw ConfigError("duplicate series name '" + input.name + "'");
    }
    if (input.value_column.empty()) {
      throw ConfigError("series '" + input.name + "' has no value column");
    }
  }
  if (reference && !names.contains(*reference)) {
    throw ConfigError("reference series '" + *reference + "' is not among the inputs");
  }
  if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() != seeds.size()) {
    throw ConfigError("surrogate seeds must be distinct");
  }
  if (subsample_ratio < 1) throw ConfigError("subsample ratio must be >= 1");
  if (bounds_grid < 2) throw ConfigError("bounds grid must be >= 2");
  if (threads < 1) throw ConfigError("threads must be >= 1");
  return window.validate();
}

RunConfig run_config_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  // Metadata files wrap the config; accept them directly for reruns.
  if (doc.is_object() && doc.contains("config") && doc["config"].is_object()) {
    doc = doc["config"];
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  if (!doc.contains("inputs") || !doc["inputs"].is_array()) {
    throw ConfigError("config needs an 'inputs' array");
  }

  RunConfig config;
  for (const auto& entry : doc["inputs"]) {
    if (!entry.is_object()) throw ConfigError("each input must be an object");
    SeriesInput input;
    input.path = get_or<std::string>(entry, "path", "");
    if (input.path.empty()) throw ConfigError("input without a 'path'");
    input.name = get_or<std::string>(entry, "name", input.path.stem().string());
    input.date_column = get_or<std::string>(entry, "date-column", input.date_column);
    input.value_column = get_or<std::string>(entry, "value-column", input.value_column);
    config.inputs.push_back(std::move(input));
  }
  auto& w = config.window;
  w.ordinal.dimension = get_or<int>(doc, "embedding-dimension", w.ordinal.dimension);
  w.ordinal.delay = get_or<int>(doc, "embedding-delay", w.ordinal.delay);
  w.window_length = get_or<std::size_t>(doc, "window-length", w.window_length);
  w.step = get_or<std::size_t>(doc, "step", w.step);
  if (doc.contains("max-windows") && !doc["max-windows"].is_null()) {
    w.max_windows = get_or<std::size_t>(doc, "max-windows", 0);
  }
  config.difference = get_or<bool>(doc, "difference", config.difference);
  config.seeds = get_or<std::vector<std::uint64_t>>(doc, "seeds", config.seeds);
  if (doc.contains("reference") && !doc["reference"].is_null()) {
    config.reference = get_or<std::string>(doc, "reference", "");
  }
  config.output_dir = get_or<std::string>(doc, "output-dir", "");
  config.format =
      parse_report_format(get_or<std::string>(doc, "format", std::string(to_string(config.format))));
  config.subsample_ratio = get_or<std::size_t>(doc, "subsample-ratio", config.subsample_ratio);
  config.bounds_grid = get_or<std::size_t>(doc, "bounds-grid", config.bounds_grid);
  config.threads = get_or<unsigned>(doc, "threads", config.threads);
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  try {
    return run_config_from_json(text);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string run_config_to_json(const RunConfig& config) {
  Json doc;
  auto& inputs = doc["inputs"] = Json::array();
  for (const auto& input : config.inputs) {
    inputs.push_back({{"name", input.name},
                      {"path", input.path.generic_string()},
                      {"date-column", input.date_column},
                      {"value-column", input.value_column}});
  }
  const auto& w = config.window;
  doc["embedding-dimension"] = w.ordinal.dimension;
  doc["embedding-delay"] = w.ordinal.delay;
  doc["window-length"] = w.window_length;
  doc["step"] = w.step;
  doc["max-windows"] = w.max_windows ? Json(*w.max_windows) : Json(nullptr);
  doc["difference"] = config.difference;
  doc["seeds"] = config.seeds;
  doc["reference"] = config.reference ? Json(*config.reference) : Json(nullptr);
  doc["format"] = std::string(to_string(config.format));
  doc["subsample-ratio"] = config.subsample_ratio;
  doc["bounds-grid"] = config.bounds_grid;
  doc["threads"] = config.threads;
  return doc.dump(2);
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    char buffer[3];
    std::snprintf(buffer, sizeof buffer, "%02x", digest[i]);
    hex += buffer;
  }
  return hex;
}

RunSummary run_pipeline(const RunConfig& config) {
  RunSummary summary;
  summary.warnings = config.validate();
  if (config.output_dir.empty()) throw ConfigError("no output directory given");

  const std::size_t alphabet = config.window.ordinal.alphabet_size();
  const BoundsCurve bounds = BoundsCurve::build(alphabet, config.bounds_grid);

  for (const auto& input : config.inputs) {
    SeriesRun run;
    run.name = input.name;
    const TimeSeries series = in_stage(input.name, "ingest", [&] {
      const std::string bytes = read_file(input.path);
      run.sha256 = sha256_hex(bytes);
      std::istringstream in(bytes);
      TimeSeries parsed = parse_csv(in, input.date_column, input.value_column,
                                    input.name, input.path.string());
      run.rows = parsed.size();
      return config.difference ? parsed.first_difference() : parsed;
    });
    run.trajectory = in_stage(input.name, "windowing", [&] {
      Trajectory t = slide(series, config.window, config.threads);
      check_bounds(t, bounds);
      return t;
    });
    for (std::uint64_t seed : config.seeds) {
      run.surrogates.push_back(in_stage(input.name, "surrogate", [&] {
        const TimeSeries shuffled = shuffle_surrogate(series, seed);
        Trajectory t = slide(shuffled, config.window, config.threads);
        check_bounds(t, bounds);
        return SurrogateRun{seed, std::move(t)};
      }));
    }
    summary.series.push_back(std::move(run));
  }

  std::vector<std::pair<std::string, std::vector<double>>> entropies;
  for (const auto& run : summary.series) {
    entropies.emplace_back(run.name, trajectory_entropies(run.trajectory));
  }
  summary.report = build_entropy_report(entropies, config.reference);

  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec) {
    throw ConfigError("cannot create output directory '" + config.output_dir.string() +
                      "': " + ec.message());
  }
  auto emit = [&](const std::string& file, auto&& writer) {
    std::ostringstream buffer;
    writer(buffer);
    const auto path = config.output_dir / file;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << buffer.str();
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    summary.files.push_back(path);
  };

  Json files = Json::array();
  auto emit_listed = [&](const std::string& file, auto&& writer) {
    emit(file, writer);
    files.push_back(file);
  };

  for (const auto& run : summary.series) {
    const auto& t = run.trajectory;
    emit_listed(run.name + "_trajectory.csv", [&](std::ostream& os) { write_trajectory_csv(os, t); });
    emit_listed(run.name + "_cecp.csv", [&](std::ostream& os) { write_cecp_csv(os, t); });
    emit_listed(run.name + "_entropy.csv", [&](std::ostream& os) { write_entropy_csv(os, t); });
    emit_listed(run.name + "_scheme.csv", [&](std::ostream& os) {
      write_scheme_csv(os, subsample_trajectory(t, config.subsample_ratio));
    });
    emit_listed(run.name + "_surrogate.csv",
                [&](std::ostream& os) { write_surrogate_csv(os, t, run.surrogates); });
  }
  emit_listed("bounds_lower.csv", [&](std::ostream& os) {
    write_curve_csv(os, min_complexity_curve(alphabet, config.bounds_grid));
  });
  emit_listed("bounds_upper.csv", [&](std::ostream& os) {
    write_curve_csv(os, max_complexity_curve(alphabet, config.bounds_grid));
  });
  if (config.format == ReportFormat::kJson) {
    emit_listed("report.json", [&](std::ostream& os) { write_report_json(os, summary.report); });
  } else {
    emit_listed("report.csv", [&](std::ostream& os) { write_report_csv(os, summary.report); });
  }

  Json metadata;
  metadata["tool"] = "cecp";
  metadata["config"] = Json::parse(run_config_to_json(config));
  metadata["random_engine"] = std::string(kSurrogateEngineName);
  metadata["alphabet_size"] = alphabet;
  auto& inputs = metadata["inputs"] = Json::array();
  for (const auto& run : summary.series) {
    inputs.push_back({{"name", run.name},
                      {"sha256", run.sha256},
                      {"rows", run.rows},
                      {"windows", run.trajectory.results.size()}});
  }
  metadata["warnings"] = summary.warnings;
  metadata["files"] = files;
  emit("metadata.json", [&](std::ostream& os) { os << metadata.dump(2) << '\n'; });
  return summary;
}

}  // namespace cecp
