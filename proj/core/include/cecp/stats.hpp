#pragma once

#include <cstddef>
#include <span>

namespace cecp {

struct SummaryStats {
  double mean = 0.0;
  double median = 0.0;
  double std_dev = 0.0;  // n - 1 denominator; NaN when n == 1
  double min = 0.0;
  double max = 0.0;
  std::size_t n = 0;
};

// Throws PreconditionError on empty input.
SummaryStats summarize(std::span<const double> values);

enum class MeanTestStatus {
  kOk,
  // Both groups have zero variance and share the same mean: F is 0/0.
  kNotApplicable,
};

struct MeanTestResult {
  double f_statistic = 0.0;
  double p_value = 1.0;
  std::size_t df_between = 1;
  std::size_t df_within = 0;
  MeanTestStatus status = MeanTestStatus::kOk;
};

// Two-group one-way ANOVA (equal variances):
//   F = SS_between / (SS_within / (n_a + n_b - 2)),  df = (1, n_a + n_b - 2)
//   p = P[F(1, df_within) >= F]
// Zero pooled variance with different means gives F = inf, p = 0.
// Throws PreconditionError unless each group has at least two values.
MeanTestResult mean_equality_test(std::span<const double> group_a,
                                  std::span<const double> group_b);

// Upper tail P[X >= f] of the F(d1, d2) distribution via the regularized
// incomplete beta function.
double f_distribution_sf(double f, double d1, double d2);

}  // namespace cecp
