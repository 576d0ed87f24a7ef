#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cecp/ordinal.hpp"
#include "cecp/quantifiers.hpp"
#include "cecp/time_series.hpp"

namespace cecp {

struct WindowSpec {
  std::size_t window_length = 300;  // rows per window
  std::size_t step = 20;            // rows between consecutive window starts
  OrdinalConfig ordinal{};
  std::optional<std::size_t> max_windows;  // cap on the number of windows

  // Throws PreconditionError unless window_length >= (D-1)tau + D!, step >= 1
  // and max_windows (when set) >= 1. Returns human-readable warnings, e.g.
  // when window_length < 5 D! and the histogram is sparsely populated.
  std::vector<std::string> validate() const;

  // floor((length - window_length) / step) + 1, capped by max_windows.
  // Zero when length < window_length.
  std::size_t window_count(std::size_t series_length) const;
};

struct WindowResult {
  std::size_t index = 0;      // 1-based
  std::size_t begin_row = 0;  // 1-based, inclusive
  std::size_t end_row = 0;    // 1-based, inclusive
  std::string begin_label;
  std::string end_label;
  Quantifiers quantifiers;
};

struct Trajectory {
  std::string series_name;
  WindowSpec spec;
  std::vector<WindowResult> results;
};

// Window k (1-based) covers rows [1 + (k-1) step, (k-1) step + window_length].
// Rows left over after the last full window are dropped. Labels come from the
// series' date column, or are the row numbers when it has none. Windows may
// be evaluated on up to `threads` worker threads; the result does not depend
// on the thread count.
// Throws PreconditionError when the series is shorter than one window.
Trajectory slide(const TimeSeries& series, const WindowSpec& spec,
                 unsigned threads = 1);

// Keeps windows whose index is 1 modulo ratio; indices are preserved.
// Throws PreconditionError when ratio == 0.
Trajectory subsample_trajectory(const Trajectory& trajectory,
                                std::size_t ratio);

std::vector<double> trajectory_entropies(const Trajectory& trajectory);
std::vector<double> trajectory_complexities(const Trajectory& trajectory);

}  // namespace cecp
