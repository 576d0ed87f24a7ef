#include "cecp/bounds.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "cecp/errors.hpp"
#include "cecp/ordinal.hpp"
#include "oracles.hpp"

namespace cecp {
namespace {

TEST(FamilyPoint, MatchesFullEvaluator) {
  const auto point = min_family_point(6, 0.9);
  const auto q = statistical_complexity(family_distribution(6, 0, 0.9));
  EXPECT_NEAR(point.entropy, q.normalized_entropy, 1e-12);
  EXPECT_NEAR(point.complexity, q.complexity, 1e-12);
  // Values from an independent evaluation of the same distribution.
  EXPECT_NEAR(point.entropy, 0.27125670213104, 1e-12);
  EXPECT_NEAR(point.complexity, 0.18113228340993, 1e-12);
}

TEST(FamilyPoint, Endpoints) {
  const auto uniform = min_family_point(24, 1.0 / 24.0);
  EXPECT_NEAR(uniform.entropy, 1.0, 1e-12);
  EXPECT_NEAR(uniform.complexity, 0.0, 1e-12);
  const auto delta = min_family_point(24, 1.0);
  EXPECT_EQ(delta.entropy, 0.0);
  EXPECT_EQ(delta.complexity, 0.0);
  EXPECT_THROW(min_family_point(24, 0.01), DomainError);
  EXPECT_THROW(max_family_point(24, 23, 0.0), PreconditionError);
  EXPECT_THROW(max_family_point(24, 0, 0.5), DomainError);
}

TEST(Curves, EveryPointMatchesItsGeneratingDistribution) {
  for (std::size_t m : {2u, 6u, 24u, 120u}) {
    for (const auto& curve : {min_complexity_curve(m, 300), max_complexity_curve(m, 300)}) {
      for (const auto& point : curve) {
        const auto q = statistical_complexity(family_distribution(m, point.zeros, point.p));
        ASSERT_NEAR(point.entropy, q.normalized_entropy, 1e-12) << "M = " << m;
        ASSERT_NEAR(point.complexity, q.complexity, 1e-12) << "M = " << m;
      }
    }
  }
}

TEST(Curves, SortedWithExtremeEndpoints) {
  for (std::size_t m : {2u, 6u, 24u}) {
    for (const auto& curve : {min_complexity_curve(m), max_complexity_curve(m)}) {
      ASSERT_GE(curve.size(), 2000u);
      for (std::size_t i = 1; i < curve.size(); ++i) {
        ASSERT_GT(curve[i].entropy, curve[i - 1].entropy);
      }
      EXPECT_NEAR(curve.front().entropy, 0.0, 1e-9);
      EXPECT_NEAR(curve.front().complexity, 0.0, 1e-9);
      EXPECT_NEAR(curve.back().entropy, 1.0, 1e-9);
      EXPECT_NEAR(curve.back().complexity, 0.0, 1e-9);
    }
  }
}

TEST(Curves, Preconditions) {
  EXPECT_THROW(min_complexity_curve(1, 100), PreconditionError);
  EXPECT_THROW(max_complexity_curve(24, 1), PreconditionError);
  EXPECT_THROW(BoundsCurve::build(24, 0), PreconditionError);
}

TEST(Curves, MaximumFamiliesTileEntropyAxis) {
  const std::size_t m = 24;
  for (std::size_t zeros = 0; zeros + 2 <= m; ++zeros) {
    const std::size_t support = m - zeros - 1;
    const auto low = max_family_point(m, zeros, 0.0);
    const auto high = max_family_point(m, zeros, 1.0 / static_cast<double>(support + 1));
    EXPECT_NEAR(low.entropy, std::log(static_cast<double>(support)) / std::log(24.0), 1e-12);
    EXPECT_NEAR(high.entropy, std::log(static_cast<double>(support + 1)) / std::log(24.0),
                1e-12);
  }
}

TEST(BoundsCurve, Invariants) {
  const auto curve = BoundsCurve::build(24);
  const auto& samples = curve.samples();
  EXPECT_EQ(samples.front().entropy, 0.0);
  EXPECT_EQ(samples.back().entropy, 1.0);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i > 0) ASSERT_GT(samples[i].entropy, samples[i - 1].entropy);
    ASSERT_LE(samples[i].c_min, samples[i].c_max + 1e-9);
  }
  EXPECT_NEAR(samples.front().c_max, 0.0, 1e-9);
  EXPECT_NEAR(samples.back().c_min, 0.0, 1e-9);
  EXPECT_NEAR(samples.back().c_max, 0.0, 1e-9);
}

TEST(BoundsCurve, ConstructorRejectsBrokenSamples) {
  EXPECT_THROW(BoundsCurve(24, {{0.0, 0.0, 0.0}}), PreconditionError);
  EXPECT_THROW(BoundsCurve(24, {{0.5, 0.0, 0.0}, {0.4, 0.0, 0.0}}), InvariantError);
  EXPECT_THROW(BoundsCurve(24, {{0.0, 0.0, 0.0}, {0.5, 0.3, 0.2}}), InvariantError);
}

TEST(InBounds, PointQueries) {
  const auto curve = BoundsCurve::build(24);
  EXPECT_TRUE(in_bounds(1.0, 0.0, curve));
  EXPECT_TRUE(in_bounds(0.0, 0.0, curve));
  EXPECT_FALSE(in_bounds(0.5, 1.0, curve));
  EXPECT_FALSE(in_bounds(0.9, 0.0, curve));  // below the lower curve
  EXPECT_THROW(in_bounds(1.5, 0.0, curve), DomainError);
  EXPECT_THROW(in_bounds(-0.1, 0.0, curve), DomainError);
}

TEST(InBounds, MonteCarloSimplexDominance) {
  std::mt19937_64 rng(2024);
  for (std::size_t m : {6u, 24u, 120u}) {
    const auto curve = BoundsCurve::build(m);
    for (int i = 0; i < 20000; ++i) {
      const auto p = oracle::simplex_draw(rng, m);
      const auto q = statistical_complexity(p);
      ASSERT_TRUE(in_bounds(q, curve, 1e-6)) << "M = " << m << " H = " << q.normalized_entropy
                                             << " C = " << q.complexity;
    }
  }
}

TEST(InBounds, SparseDrawsNearTheEdges) {
  // Small supports and concentrated weights reach far closer to the upper
  // envelope than flat simplex draws.
  std::mt19937_64 rng(77);
  const std::size_t m = 24;
  const auto curve = BoundsCurve::build(m);
  double closest_to_top = 1.0;
  for (int i = 0; i < 50000; ++i) {
    const std::size_t support = 1 + static_cast<std::size_t>(i % static_cast<int>(m));
    const double alpha = (i / 24) % 3 == 0 ? 0.1 : ((i / 24) % 3 == 1 ? 1.0 : 20.0);
    const auto p = oracle::sparse_draw(rng, m, support, alpha);
    const auto q = statistical_complexity(p);
    ASSERT_TRUE(in_bounds(q, curve, 1e-6))
        << "H = " << q.normalized_entropy << " C = " << q.complexity;
    closest_to_top = std::min(closest_to_top, curve.c_max(q.normalized_entropy) - q.complexity);
  }
  EXPECT_LT(closest_to_top, 0.01);
}

TEST(InBounds, OrdinalDistributionsFromSeries) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  const auto curve = BoundsCurve::build(24);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> values(300);
    double x = 0.0;
    const double phi = trial / 100.0;
    for (double& v : values) v = x = phi * x + normal(rng);
    const auto q = statistical_complexity(pattern_distribution(values, OrdinalConfig{4, 1}));
    EXPECT_TRUE(in_bounds(q, curve));
  }
}

}  // namespace
}  // namespace cecp
