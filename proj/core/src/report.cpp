#include "cecp/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include <nlohmann/json.hpp>

#include "cecp/errors.hpp"

namespace cecp {

namespace {

constexpr double kPrintAsZeroBelow = 1e-15;

std::string printf_double(const char* format, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, format, value);
  return buffer;
}

// CSV field quoting for labels that may contain commas or quotes.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct ReportRow {
  const char* label;
  std::function<std::string(const SeriesReport&)> cell;
};

std::vector<ReportRow> report_rows() {
  auto stat = [](double SummaryStats::*field) {
    return [field](const SeriesReport& s) { return format_report(s.stats.*field); };
  };
  return {
      {"Mean", stat(&SummaryStats::mean)},
      {"Median", stat(&SummaryStats::median)},
      {"StdDev", stat(&SummaryStats::std_dev)},
      {"Min", stat(&SummaryStats::min)},
      {"Max", stat(&SummaryStats::max)},
      {"F",
       [](const SeriesReport& s) {
         if (!s.test || s.test->status != MeanTestStatus::kOk) return std::string();
         return format_report(s.test->f_statistic);
       }},
      {"p-value",
       [](const SeriesReport& s) {
         if (!s.test || s.test->status != MeanTestStatus::kOk) return std::string();
         return format_p_value(s.test->p_value);
       }},
  };
}

nlohmann::ordered_json report_number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return std::stod(format_report(value));
}

}  // namespace

std::string format_full(double value) { return printf_double("%.17g", value); }

std::string format_report(double value) { return printf_double("%.6g", value); }

std::string format_p_value(double p) {
  if (p < kPrintAsZeroBelow) return "0.00000";
  return format_report(p);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory) {
  os << "index,begin,end,S,H,C\n";
  for (const auto& r : trajectory.results) {
    os << r.index << ',' << csv_field(r.begin_label) << ',' << csv_field(r.end_label)
       << ',' << format_full(r.quantifiers.shannon) << ','
       << format_full(r.quantifiers.normalized_entropy) << ','
       << format_full(r.quantifiers.complexity) << '\n';
  }
}

void write_cecp_csv(std::ostream& os, const Trajectory& trajectory) {
  os << "H,C\n";
  for (const auto& r : trajectory.results) {
    os << format_full(r.quantifiers.normalized_entropy) << ','
       << format_full(r.quantifiers.complexity) << '\n';
  }
}

void write_entropy_csv(std::ostream& os, const Trajectory& trajectory) {
  os << "index,begin,end,H\n";
  for (const auto& r : trajectory.results) {
    os << r.index << ',' << csv_field(r.begin_label) << ',' << csv_field(r.end_label)
       << ',' << format_full(r.quantifiers.normalized_entropy) << '\n';
  }
}

void write_scheme_csv(std::ostream& os, const Trajectory& trajectory) {
  os << "index,begin,end,H,C\n";
  for (const auto& r : trajectory.results) {
    os << r.index << ',' << csv_field(r.begin_label) << ',' << csv_field(r.end_label)
       << ',' << format_full(r.quantifiers.normalized_entropy) << ','
       << format_full(r.quantifiers.complexity) << '\n';
  }
}

void write_curve_csv(std::ostream& os, const std::vector<FamilyPoint>& curve) {
  os << "H,C\n";
  for (const auto& point : curve) {
    os << format_full(point.entropy) << ',' << format_full(point.complexity) << '\n';
  }
}

void write_surrogate_csv(std::ostream& os, const Trajectory& original,
                         const std::vector<SurrogateRun>& surrogates) {
  os << "kind,seed,index,H,C\n";
  for (const auto& r : original.results) {
    os << "original,," << r.index << ',' << format_full(r.quantifiers.normalized_entropy)
       << ',' << format_full(r.quantifiers.complexity) << '\n';
  }
  for (const auto& run : surrogates) {
    for (const auto& r : run.trajectory.results) {
      os << "shuffled," << run.seed << ',' << r.index << ','
         << format_full(r.quantifiers.normalized_entropy) << ','
         << format_full(r.quantifiers.complexity) << '\n';
    }
  }
}

EntropyReport build_entropy_report(
    const std::vector<std::pair<std::string, std::vector<double>>>& entropies,
    const std::optional<std::string>& reference) {
  EntropyReport report;
  report.reference = reference;
  const std::vector<double>* reference_values = nullptr;
  if (reference) {
    const auto it = std::find_if(entropies.begin(), entropies.end(),
                                 [&](const auto& e) { return e.first == *reference; });
    if (it == entropies.end()) {
      throw ConfigError("reference series '" + *reference + "' is not among the inputs");
    }
    reference_values = &it->second;
  }
  for (const auto& [name, values] : entropies) {
    SeriesReport column{name, summarize(values), std::nullopt};
    if (reference_values && name != *reference) {
      column.test = mean_equality_test(values, *reference_values);
    }
    report.columns.push_back(std::move(column));
  }
  return report;
}

void write_report_csv(std::ostream& os, const EntropyReport& report) {
  os << "statistic";
  for (const auto& column : report.columns) os << ',' << csv_field(column.name);
  os << '\n';
  for (const auto& row : report_rows()) {
    os << row.label;
    for (const auto& column : report.columns) os << ',' << row.cell(column);
    os << '\n';
  }
}

void write_report_json(std::ostream& os, const EntropyReport& report) {
  nlohmann::ordered_json doc;
  doc["reference"] = report.reference ? nlohmann::ordered_json(*report.reference)
                                      : nlohmann::ordered_json(nullptr);
  auto& series = doc["series"] = nlohmann::ordered_json::array();
  for (const auto& column : report.columns) {
    nlohmann::ordered_json entry;
    entry["name"] = column.name;
    entry["n"] = column.stats.n;
    entry["mean"] = report_number(column.stats.mean);
    entry["median"] = report_number(column.stats.median);
    entry["std_dev"] = report_number(column.stats.std_dev);
    entry["min"] = report_number(column.stats.min);
    entry["max"] = report_number(column.stats.max);
    if (column.test && column.test->status == MeanTestStatus::kOk) {
      entry["f"] = report_number(column.test->f_statistic);
      entry["p_value"] = column.test->p_value < kPrintAsZeroBelow
                             ? nlohmann::ordered_json(0.0)
                             : report_number(column.test->p_value);
      entry["df"] = {column.test->df_between, column.test->df_within};
    } else {
      entry["f"] = nullptr;
      entry["p_value"] = nullptr;
    }
    series.push_back(std::move(entry));
  }
  os << doc.dump(2) << '\n';
}

}  // namespace cecp
