#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "cecp/time_series.hpp"

namespace cecp {

// All seeded randomness in the library runs on this engine. Its output
// sequence is fixed by the C++ standard, so seeds reproduce across platforms.
using SurrogateEngine = std::mt19937_64;
inline constexpr std::string_view kSurrogateEngineName = "mt19937_64";

// Uniform integer in [0, bound) by rejection on the raw 64-bit engine output.
// The standard distributions are implementation-defined and are not used.
std::uint64_t uniform_below(SurrogateEngine& engine, std::uint64_t bound);

// Fisher-Yates shuffle of the values; labels are dropped and the name gets a
// "-shuffled" suffix. The multiset of values is preserved exactly.
TimeSeries shuffle_surrogate(const TimeSeries& series, std::uint64_t seed);

}  // namespace cecp
