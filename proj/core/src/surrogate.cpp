#include "cecp/surrogate.hpp"

#include <limits>
#include <utility>
#include <vector>

namespace cecp {

std::uint64_t uniform_below(SurrogateEngine& engine, std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Reject the top partial bucket so every residue is equally likely.
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - (kMax % bound + 1) % bound;
  std::uint64_t draw = engine();
  while (draw > limit) draw = engine();
  return draw % bound;
}

TimeSeries shuffle_surrogate(const TimeSeries& series, std::uint64_t seed) {
  SurrogateEngine engine(seed);
  const auto source = series.values();
  std::vector<double> values(source.begin(), source.end());
  for (std::size_t i = values.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(engine, i));
    std::swap(values[i - 1], values[j]);
  }
  return TimeSeries(series.name() + "-shuffled", std::move(values));
}

}  // namespace cecp
