#include "cecp/synthetic.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>
#include <vector>

#include "cecp/errors.hpp"

namespace cecp::synthetic {

double uniform01(SurrogateEngine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

double standard_normal(SurrogateEngine& engine) {
  // 1 - u lies in (0, 1], keeping the logarithm finite.
  const double u1 = 1.0 - uniform01(engine);
  const double u2 = uniform01(engine);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

TimeSeries white_noise(std::size_t length, std::uint64_t seed, std::string name) {
  SurrogateEngine engine(seed);
  std::vector<double> values(length);
  for (double& v : values) v = uniform01(engine);
  return TimeSeries(std::move(name), std::move(values));
}

TimeSeries gaussian_noise(std::size_t length, std::uint64_t seed, std::string name) {
  SurrogateEngine engine(seed);
  std::vector<double> values(length);
  for (double& v : values) v = standard_normal(engine);
  return TimeSeries(std::move(name), std::move(values));
}

TimeSeries ramp(std::size_t length, double start, double slope, std::string name) {
  std::vector<double> values(length);
  for (std::size_t i = 0; i < length; ++i) {
    values[i] = start + slope * static_cast<double>(i);
  }
  return TimeSeries(std::move(name), std::move(values));
}

TimeSeries ar1(std::size_t length, double phi, std::uint64_t seed, std::string name) {
  SurrogateEngine engine(seed);
  std::vector<double> values(length);
  double x = 0.0;
  for (std::size_t i = 0; i < length; ++i) {
    x = (i == 0 ? 0.0 : phi * x) + standard_normal(engine);
    values[i] = x;
  }
  return TimeSeries(std::move(name), std::move(values));
}

std::vector<std::string> business_day_labels(std::size_t count, int year,
                                             unsigned month, unsigned day) {
  using namespace std::chrono;
  const year_month_day start{std::chrono::year{year}, std::chrono::month{month},
                             std::chrono::day{day}};
  if (!start.ok()) throw PreconditionError("invalid start date");
  sys_days current{start};
  std::vector<std::string> labels;
  labels.reserve(count);
  while (labels.size() < count) {
    const weekday wd{current};
    if (wd != Saturday && wd != Sunday) {
      const year_month_day ymd{current};
      char buffer[16];
      std::snprintf(buffer, sizeof buffer, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                    static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
      labels.emplace_back(buffer);
    }
    current += days{1};
  }
  return labels;
}

}  // namespace cecp::synthetic
