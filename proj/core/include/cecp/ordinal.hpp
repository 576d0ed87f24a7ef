#pragma once

// Bandt-Pompe symbolization: ordinal patterns of D values spaced tau apart,
// their lexicographic (Lehmer) index, and the empirical pattern histogram.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cecp/time_series.hpp"

namespace cecp {

inline constexpr int kMinDimension = 2;
inline constexpr int kMaxDimension = 9;

struct OrdinalConfig {
  int dimension = 4;  // D, pattern length
  int delay = 1;      // tau, spacing between compared observations

  // Throws PreconditionError unless 2 <= D <= 9 and tau >= 1.
  void validate() const;

  // D!
  std::size_t alphabet_size() const;

  // (D - 1) * tau: distance from the first to the last element of a pattern.
  std::size_t span() const;

  // Smallest series length that yields at least one pattern.
  std::size_t min_series_length() const { return span() + 1; }
};

std::size_t factorial(int n);

// pi = (r_0, ..., r_{D-1}): r_i is the backward offset (in units of tau) of
// the i-th largest value in the embedding vector, so that
//   x_{s - r_{D-1} tau} <= ... <= x_{s - r_0 tau}.
class OrdinalPattern {
 public:
  // Throws DomainError unless ranks is a permutation of 0..size-1 with
  // 2 <= size <= 9.
  explicit OrdinalPattern(std::span<const int> ranks);

  static OrdinalPattern from_index(std::uint32_t index, int dimension);

  int dimension() const { return dimension_; }
  std::span<const std::uint8_t> ranks() const {
    return {ranks_.data(), static_cast<std::size_t>(dimension_)};
  }
  std::vector<int> rank_vector() const;
  std::uint32_t index() const { return index_; }

  friend bool operator==(const OrdinalPattern& a, const OrdinalPattern& b) {
    return a.dimension_ == b.dimension_ && a.index_ == b.index_;
  }

 private:
  OrdinalPattern() = default;

  std::array<std::uint8_t, kMaxDimension> ranks_{};
  int dimension_ = 0;
  std::uint32_t index_ = 0;
};

// Lexicographic rank of a permutation of 0..D-1, in [0, D! - 1].
// Throws DomainError if ranks is not a permutation.
std::uint32_t encode_pattern(std::span<const int> ranks);

// Inverse of encode_pattern. Throws PreconditionError on out-of-range input.
std::vector<int> decode_pattern(std::uint32_t index, int dimension);

// window holds (x_{s-(D-1)tau}, ..., x_{s-tau}, x_s) in time order.
// Equal values: the one further in the past ranks as larger.
OrdinalPattern extract_pattern(std::span<const double> window,
                               const OrdinalConfig& config);

// Pattern index of the embedding vector ending at values[end], read with
// stride config.delay. No validation; end must be >= config.span().
std::uint32_t pattern_index_at(std::span<const double> values,
                               std::size_t end, const OrdinalConfig& config);

// Pattern index of every admissible end position s, in time order.
// Element k corresponds to s = k + (D-1)tau (0-based).
std::vector<std::uint32_t> pattern_sequence(std::span<const double> values,
                                            const OrdinalConfig& config);

struct PatternDistribution {
  int dimension = 0;
  std::vector<std::uint64_t> counts;  // D! bins, lexicographic order
  std::vector<double> probabilities;  // counts[i] / total_vectors
  std::uint64_t total_vectors = 0;

  std::size_t alphabet_size() const { return counts.size(); }

  // Builds probabilities from counts. Throws PreconditionError on zero total.
  static PatternDistribution from_counts(int dimension,
                                         std::vector<std::uint64_t> counts);
};

// Histogram of ordinal patterns over every admissible s.
// Throws PreconditionError when the series is shorter than (D-1)tau + 1.
PatternDistribution pattern_distribution(std::span<const double> values,
                                         const OrdinalConfig& config);
PatternDistribution pattern_distribution(const TimeSeries& series,
                                         const OrdinalConfig& config);

}  // namespace cecp
