#include "cecp/ordinal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cecp/errors.hpp"

namespace cecp {

namespace {

constexpr std::array<std::uint32_t, kMaxDimension + 1> kFactorials = {
    1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880};

void require_permutation(std::span<const int> ranks) {
  if (ranks.empty() || ranks.size() > kMaxDimension) {
    throw DomainError("permutation size " + std::to_string(ranks.size()) +
                      " outside [1, " + std::to_string(kMaxDimension) + "]");
  }
  std::array<bool, kMaxDimension> seen{};
  for (int r : ranks) {
    if (r < 0 || static_cast<std::size_t>(r) >= ranks.size() || seen[r]) {
      throw DomainError("not a permutation of 0.." +
                        std::to_string(ranks.size() - 1));
    }
    seen[r] = true;
  }
}

void require_finite(std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw DomainError("non-finite value at position " + std::to_string(i));
    }
  }
}

}  // namespace

std::size_t factorial(int n) {
  if (n < 0 || n > kMaxDimension) {
    throw PreconditionError("factorial(" + std::to_string(n) + ") out of table range");
  }
  return kFactorials[n];
}

void OrdinalConfig::validate() const {
  if (dimension < kMinDimension || dimension > kMaxDimension) {
    throw PreconditionError("embedding dimension " + std::to_string(dimension) +
                            " outside [" + std::to_string(kMinDimension) + ", " +
                            std::to_string(kMaxDimension) + "]");
  }
  if (delay < 1) {
    throw PreconditionError("embedding delay must be >= 1, got " +
                            std::to_string(delay));
  }
}

std::size_t OrdinalConfig::alphabet_size() const { return factorial(dimension); }

std::size_t OrdinalConfig::span() const {
  return static_cast<std::size_t>(dimension - 1) * static_cast<std::size_t>(delay);
}

OrdinalPattern::OrdinalPattern(std::span<const int> ranks) {
  if (ranks.size() < kMinDimension) {
    throw DomainError("ordinal pattern needs at least " +
                      std::to_string(kMinDimension) + " ranks");
  }
  index_ = encode_pattern(ranks);
  dimension_ = static_cast<int>(ranks.size());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    ranks_[i] = static_cast<std::uint8_t>(ranks[i]);
  }
}

OrdinalPattern OrdinalPattern::from_index(std::uint32_t index, int dimension) {
  const auto ranks = decode_pattern(index, dimension);
  return OrdinalPattern(ranks);
}

std::vector<int> OrdinalPattern::rank_vector() const {
  const auto r = ranks();
  return {r.begin(), r.end()};
}

std::uint32_t encode_pattern(std::span<const int> ranks) {
  require_permutation(ranks);
  const std::size_t n = ranks.size();
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t smaller_after = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (ranks[j] < ranks[i]) ++smaller_after;
    }
    index += smaller_after * kFactorials[n - 1 - i];
  }
  return index;
}

std::vector<int> decode_pattern(std::uint32_t index, int dimension) {
  if (dimension < 1 || dimension > kMaxDimension) {
    throw PreconditionError("pattern dimension " + std::to_string(dimension) +
                            " outside [1, " + std::to_string(kMaxDimension) + "]");
  }
  if (index >= kFactorials[dimension]) {
    throw PreconditionError("pattern index " + std::to_string(index) +
                            " outside [0, " +
                            std::to_string(kFactorials[dimension] - 1) + "]");
  }
  std::vector<int> items(static_cast<std::size_t>(dimension));
  std::iota(items.begin(), items.end(), 0);
  std::vector<int> ranks;
  ranks.reserve(items.size());
  for (int i = dimension - 1; i >= 0; --i) {
    const std::uint32_t digit = index / kFactorials[i];
    index %= kFactorials[i];
    ranks.push_back(items[digit]);
    items.erase(items.begin() + digit);
  }
  return ranks;
}

OrdinalPattern extract_pattern(std::span<const double> window,
                               const OrdinalConfig& config) {
  config.validate();
  const auto d = static_cast<std::size_t>(config.dimension);
  if (window.size() != d) {
    throw ShapeError("pattern window holds " + std::to_string(window.size()) +
                     " values, expected D = " + std::to_string(d));
  }
  require_finite(window);

  // Offsets sorted by value descending; on ties the larger offset (older
  // observation) comes first.
  std::array<int, kMaxDimension> offsets{};
  for (std::size_t i = 0; i < d; ++i) offsets[i] = static_cast<int>(d - 1 - i);
  std::sort(offsets.begin(), offsets.begin() + d, [&](int a, int b) {
    const double va = window[d - 1 - a];
    const double vb = window[d - 1 - b];
    if (va != vb) return va > vb;
    return a > b;
  });
  return OrdinalPattern(std::span<const int>(offsets.data(), d));
}

std::uint32_t pattern_index_at(std::span<const double> values, std::size_t end,
                               const OrdinalConfig& config) {
  // For the element at time position a (0 = oldest) the Lehmer digit of its
  // slot in pi is #{b > a : w[b] <= w[a]}, and its slot is the number of
  // elements ranked above it.
  const int d = config.dimension;
  const std::size_t tau = static_cast<std::size_t>(config.delay);
  std::array<double, kMaxDimension> w{};
  const std::size_t first = end - config.span();
  for (int a = 0; a < d; ++a) w[a] = values[first + static_cast<std::size_t>(a) * tau];

  std::uint32_t index = 0;
  for (int a = 0; a < d; ++a) {
    int slot = 0;
    int digit = 0;
    for (int b = 0; b < a; ++b) slot += (w[b] >= w[a]);
    for (int b = a + 1; b < d; ++b) {
      const bool below_or_equal = w[b] <= w[a];
      digit += below_or_equal;
      slot += !below_or_equal;
    }
    index += static_cast<std::uint32_t>(digit) * kFactorials[d - 1 - slot];
  }
  return index;
}

std::vector<std::uint32_t> pattern_sequence(std::span<const double> values,
                                            const OrdinalConfig& config) {
  config.validate();
  const std::size_t span = config.span();
  if (values.size() < span + 1) {
    throw PreconditionError("series of length " + std::to_string(values.size()) +
                            " is too short for D = " + std::to_string(config.dimension) +
                            ", tau = " + std::to_string(config.delay) +
                            "; need at least " + std::to_string(span + 1));
  }
  require_finite(values);
  std::vector<std::uint32_t> sequence(values.size() - span);
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    sequence[k] = pattern_index_at(values, k + span, config);
  }
  return sequence;
}

PatternDistribution PatternDistribution::from_counts(
    int dimension, std::vector<std::uint64_t> counts) {
  if (counts.size() != factorial(dimension)) {
    throw ShapeError("histogram has " + std::to_string(counts.size()) +
                     " bins, expected D! = " + std::to_string(factorial(dimension)));
  }
  PatternDistribution dist;
  dist.dimension = dimension;
  dist.total_vectors = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (dist.total_vectors == 0) {
    throw PreconditionError("pattern histogram is empty");
  }
  dist.probabilities.resize(counts.size());
  const auto total = static_cast<double>(dist.total_vectors);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    dist.probabilities[i] = static_cast<double>(counts[i]) / total;
  }
  dist.counts = std::move(counts);
  return dist;
}

PatternDistribution pattern_distribution(std::span<const double> values,
                                         const OrdinalConfig& config) {
  const auto sequence = pattern_sequence(values, config);
  std::vector<std::uint64_t> counts(config.alphabet_size(), 0);
  for (std::uint32_t index : sequence) ++counts[index];
  return PatternDistribution::from_counts(config.dimension, std::move(counts));
}

PatternDistribution pattern_distribution(const TimeSeries& series,
                                         const OrdinalConfig& config) {
  return pattern_distribution(series.values(), config);
}

}  // namespace cecp
