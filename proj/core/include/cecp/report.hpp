#pragma once

// Plot-ready exports. Data files print full round-trip precision (%.17g);
// the cross-series report prints six significant digits.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cecp/bounds.hpp"
#include "cecp/stats.hpp"
#include "cecp/window.hpp"

namespace cecp {

std::string format_full(double value);
std::string format_report(double value);
// format_report, except p < 1e-15 prints as 0.00000.
std::string format_p_value(double p);

// index,begin,end,S,H,C
void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory);
// H,C
void write_cecp_csv(std::ostream& os, const Trajectory& trajectory);
// index,begin,end,H
void write_entropy_csv(std::ostream& os, const Trajectory& trajectory);
// index,begin,end,H,C
void write_scheme_csv(std::ostream& os, const Trajectory& trajectory);
// H,C
void write_curve_csv(std::ostream& os, const std::vector<FamilyPoint>& curve);

struct SurrogateRun {
  std::uint64_t seed = 0;
  Trajectory trajectory;
};

// kind,seed,index,H,C with kind = original | shuffled; the original rows
// carry an empty seed.
void write_surrogate_csv(std::ostream& os, const Trajectory& original,
                         const std::vector<SurrogateRun>& surrogates);

struct SeriesReport {
  std::string name;
  SummaryStats stats;
  std::optional<MeanTestResult> test;  // empty for the reference series
};

struct EntropyReport {
  std::optional<std::string> reference;
  std::vector<SeriesReport> columns;  // config declaration order
};

// Summary of each series' window entropies and, when a reference is named,
// the mean-equality test of every other series against it.
// Throws ConfigError if the reference is not among the series.
EntropyReport build_entropy_report(
    const std::vector<std::pair<std::string, std::vector<double>>>& entropies,
    const std::optional<std::string>& reference);

// One column per series; rows Mean, Median, StdDev, Min, Max, F, p-value.
void write_report_csv(std::ostream& os, const EntropyReport& report);
void write_report_json(std::ostream& os, const EntropyReport& report);

}  // namespace cecp
