#include "cecp/window.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>

#include "cecp/errors.hpp"

namespace cecp {

std::vector<std::string> WindowSpec::validate() const {
  ordinal.validate();
  const std::size_t alphabet = ordinal.alphabet_size();
  const std::size_t minimum = ordinal.span() + alphabet;
  if (window_length < minimum) {
    throw PreconditionError("window length " + std::to_string(window_length) +
                            " is below (D-1)tau + D! = " + std::to_string(minimum));
  }
  if (step < 1) throw PreconditionError("window step must be >= 1");
  if (max_windows && *max_windows < 1) {
    throw PreconditionError("max windows must be >= 1");
  }
  std::vector<std::string> warnings;
  if (window_length < 5 * alphabet) {
    warnings.push_back("window length " + std::to_string(window_length) +
                       " is below 5 D! = " + std::to_string(5 * alphabet) +
                       "; pattern histograms will be sparsely populated");
  }
  return warnings;
}

std::size_t WindowSpec::window_count(std::size_t series_length) const {
  if (series_length < window_length || step == 0) return 0;
  const std::size_t count = (series_length - window_length) / step + 1;
  return max_windows ? std::min(count, *max_windows) : count;
}

Trajectory slide(const TimeSeries& series, const WindowSpec& spec, unsigned threads) {
  spec.validate();
  const std::size_t count = spec.window_count(series.size());
  if (count == 0) {
    throw PreconditionError("series '" + series.name() + "' has " +
                            std::to_string(series.size()) +
                            " rows, fewer than one window of " +
                            std::to_string(spec.window_length));
  }

  // Patterns are computed once for the whole series; window k owns the
  // patterns whose last element lies inside it.
  const auto patterns = pattern_sequence(series.values(), spec.ordinal);
  const std::size_t span = spec.ordinal.span();
  const std::size_t per_window = spec.window_length - span;

  Trajectory trajectory{series.name(), spec, std::vector<WindowResult>(count)};

  auto evaluate = [&](std::size_t k) {
    const std::size_t first_row = k * spec.step;  // 0-based
    std::vector<std::uint64_t> counts(spec.ordinal.alphabet_size(), 0);
    for (std::size_t i = 0; i < per_window; ++i) ++counts[patterns[first_row + i]];
    const auto dist =
        PatternDistribution::from_counts(spec.ordinal.dimension, std::move(counts));

    WindowResult& result = trajectory.results[k];
    result.index = k + 1;
    result.begin_row = first_row + 1;
    result.end_row = first_row + spec.window_length;
    result.begin_label = series.row_label(result.begin_row);
    result.end_label = series.row_label(result.end_row);
    result.quantifiers = statistical_complexity(dist);
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, count);
  if (workers == 1) {
    for (std::size_t k = 0; k < count; ++k) evaluate(k);
    return trajectory;
  }
  // Strided partition; every window writes only its own slot.
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = w; k < count; k += workers) evaluate(k);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return trajectory;
}

Trajectory subsample_trajectory(const Trajectory& trajectory, std::size_t ratio) {
  if (ratio == 0) throw PreconditionError("subsample ratio must be >= 1");
  Trajectory out{trajectory.series_name, trajectory.spec, {}};
  for (const auto& result : trajectory.results) {
    if ((result.index - 1) % ratio == 0) out.results.push_back(result);
  }
  return out;
}

std::vector<double> trajectory_entropies(const Trajectory& trajectory) {
  std::vector<double> out;
  out.reserve(trajectory.results.size());
  for (const auto& r : trajectory.results) out.push_back(r.quantifiers.normalized_entropy);
  return out;
}

std::vector<double> trajectory_complexities(const Trajectory& trajectory) {
  std::vector<double> out;
  out.reserve(trajectory.results.size());
  for (const auto& r : trajectory.results) out.push_back(r.quantifiers.complexity);
  return out;
}

}  // namespace cecp
