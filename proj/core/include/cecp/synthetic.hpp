#pragma once

// Deterministic synthetic series for fixtures, smoke runs and benchmarks.
// Built on SurrogateEngine with hand-written transforms so that a seed gives
// the same series on every standard library.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cecp/surrogate.hpp"
#include "cecp/time_series.hpp"

namespace cecp::synthetic {

// Uniform double in [0, 1) from the top 53 bits.
double uniform01(SurrogateEngine& engine);

// Standard normal via the Box-Muller transform.
double standard_normal(SurrogateEngine& engine);

TimeSeries white_noise(std::size_t length, std::uint64_t seed,
                       std::string name = "noise");

TimeSeries gaussian_noise(std::size_t length, std::uint64_t seed,
                          std::string name = "gaussian");

// x_t = start + t * slope, strictly increasing for slope > 0.
TimeSeries ramp(std::size_t length, double start = 0.0, double slope = 1.0,
                std::string name = "ramp");

// x_t = phi x_{t-1} + e_t with standard normal innovations, x_0 = e_0.
TimeSeries ar1(std::size_t length, double phi, std::uint64_t seed,
               std::string name = "ar1");

// ISO dates (YYYY-MM-DD) of `count` consecutive weekdays starting at the
// given date, or at the next weekday when it falls on a weekend.
std::vector<std::string> business_day_labels(std::size_t count, int year,
                                             unsigned month, unsigned day);

}  // namespace cecp::synthetic
