#include "cecp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <boost/math/special_functions/beta.hpp>

#include "cecp/errors.hpp"

namespace cecp {

namespace {

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double squared_deviations(std::span<const double> v, double mean) {
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return ss;
}

}  // namespace

SummaryStats summarize(std::span<const double> values) {
  if (values.empty()) throw PreconditionError("cannot summarize an empty sample");
  SummaryStats s;
  s.n = values.size();
  s.mean = mean_of(values);

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  s.min = sorted.front();
  s.max = sorted.back();
  const std::size_t mid = s.n / 2;
  s.median = s.n % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);

  s.std_dev = s.n < 2 ? std::numeric_limits<double>::quiet_NaN()
                      : std::sqrt(squared_deviations(values, s.mean) /
                                  static_cast<double>(s.n - 1));
  return s;
}

double f_distribution_sf(double f, double d1, double d2) {
  if (!(d1 > 0.0 && d2 > 0.0)) {
    throw PreconditionError("F distribution needs positive degrees of freedom");
  }
  if (std::isnan(f)) throw DomainError("F statistic is NaN");
  if (f <= 0.0) return 1.0;
  if (std::isinf(f)) return 0.0;
  // P[F >= f] = I_x(d2/2, d1/2) with x = d2 / (d2 + d1 f).
  const double x = d2 / (d2 + d1 * f);
  return std::clamp(boost::math::ibeta(0.5 * d2, 0.5 * d1, x), 0.0, 1.0);
}

MeanTestResult mean_equality_test(std::span<const double> group_a,
                                  std::span<const double> group_b) {
  if (group_a.size() < 2 || group_b.size() < 2) {
    throw PreconditionError("mean equality test needs at least 2 values per group, got " +
                            std::to_string(group_a.size()) + " and " +
                            std::to_string(group_b.size()));
  }
  const auto na = static_cast<double>(group_a.size());
  const auto nb = static_cast<double>(group_b.size());
  const double mean_a = mean_of(group_a);
  const double mean_b = mean_of(group_b);

  MeanTestResult r;
  r.df_between = 1;
  r.df_within = group_a.size() + group_b.size() - 2;

  // Two-group between sum of squares, exactly zero for equal means.
  const double diff = mean_a - mean_b;
  const double ss_between = na * nb / (na + nb) * diff * diff;
  const double ss_within =
      squared_deviations(group_a, mean_a) + squared_deviations(group_b, mean_b);

  if (ss_within == 0.0) {
    if (ss_between == 0.0) {
      r.status = MeanTestStatus::kNotApplicable;
      r.f_statistic = std::numeric_limits<double>::quiet_NaN();
      r.p_value = std::numeric_limits<double>::quiet_NaN();
    } else {
      r.f_statistic = std::numeric_limits<double>::infinity();
      r.p_value = 0.0;
    }
    return r;
  }
  r.f_statistic = ss_between / (ss_within / static_cast<double>(r.df_within));
  r.p_value = f_distribution_sf(r.f_statistic, 1.0, static_cast<double>(r.df_within));
  return r;
}

}  // namespace cecp
