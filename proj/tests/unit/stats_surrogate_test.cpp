#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "cecp/errors.hpp"
#include "cecp/stats.hpp"
#include "cecp/surrogate.hpp"
#include "cecp/synthetic.hpp"
#include "cecp/window.hpp"

namespace cecp {
namespace {

// Pooled-variance two-sample t statistic, written out independently.
double pooled_t(const std::vector<double>& a, const std::vector<double>& b) {
  auto mean = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  auto ss = [](const std::vector<double>& v, double m) {
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s;
  };
  const double ma = mean(a), mb = mean(b);
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  const double sp2 = (ss(a, ma) + ss(b, mb)) / (na + nb - 2.0);
  return (ma - mb) / std::sqrt(sp2 * (1.0 / na + 1.0 / nb));
}

TEST(Summarize, ReferenceValues) {
  const auto s = summarize(std::vector<double>{1, 2, 3});
  EXPECT_EQ(s.mean, 2.0);
  EXPECT_EQ(s.median, 2.0);
  EXPECT_EQ(s.std_dev, 1.0);
  EXPECT_EQ(s.min, 1.0);
  EXPECT_EQ(s.max, 3.0);
  EXPECT_EQ(s.n, 3u);

  const auto c = summarize(std::vector<double>{4, 4, 4, 4});
  EXPECT_EQ(c.std_dev, 0.0);

  const auto e = summarize(std::vector<double>{0.9, 0.2, 0.6, 0.4});
  EXPECT_NEAR(e.mean, 0.525, 1e-15);
  EXPECT_NEAR(e.median, 0.5, 1e-15);
  EXPECT_NEAR(e.std_dev, 0.29860788111948, 1e-12);
  EXPECT_EQ(e.min, 0.2);
  EXPECT_EQ(e.max, 0.9);

  const auto one = summarize(std::vector<double>{7.0});
  EXPECT_EQ(one.median, 7.0);
  EXPECT_TRUE(std::isnan(one.std_dev));
  EXPECT_THROW(summarize(std::vector<double>{}), PreconditionError);
}

TEST(Summarize, OrderingInvariant) {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> normal;
  for (int i = 0; i < 100; ++i) {
    std::vector<double> v(1 + i);
    for (double& x : v) x = normal(rng);
    const auto s = summarize(v);
    EXPECT_LE(s.min, s.median);
    EXPECT_LE(s.median, s.max);
    if (v.size() > 1) EXPECT_GE(s.std_dev, 0.0);
  }
}

TEST(MeanEqualityTest, HandComputedAnova) {
  const auto r = mean_equality_test(std::vector<double>{1, 2, 3}, std::vector<double>{2, 3, 4});
  EXPECT_NEAR(r.f_statistic, 1.5, 1e-12);
  EXPECT_EQ(r.df_between, 1u);
  EXPECT_EQ(r.df_within, 4u);
  // Independent evaluation of the F(1, 4) upper tail at 1.5.
  EXPECT_NEAR(r.p_value, 0.28786413472669, 1e-10);
  EXPECT_EQ(r.status, MeanTestStatus::kOk);
}

TEST(MeanEqualityTest, IdenticalGroups) {
  const std::vector<double> g{0.3, 0.9, 0.4, 0.7};
  const auto r = mean_equality_test(g, g);
  EXPECT_EQ(r.f_statistic, 0.0);
  EXPECT_EQ(r.p_value, 1.0);
}

TEST(MeanEqualityTest, DegenerateVariances) {
  const auto inf = mean_equality_test(std::vector<double>{1, 1}, std::vector<double>{2, 2, 2});
  EXPECT_TRUE(std::isinf(inf.f_statistic));
  EXPECT_EQ(inf.p_value, 0.0);
  const auto na = mean_equality_test(std::vector<double>{3, 3}, std::vector<double>{3, 3});
  EXPECT_EQ(na.status, MeanTestStatus::kNotApplicable);
  EXPECT_THROW(mean_equality_test(std::vector<double>{1}, std::vector<double>{1, 2}),
               PreconditionError);
}

TEST(MeanEqualityTest, EqualsSquaredPooledT) {
  std::mt19937_64 rng(10);
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> size(2, 40);
  for (int i = 0; i < 300; ++i) {
    std::vector<double> a(size(rng)), b(size(rng));
    for (double& x : a) x = normal(rng);
    for (double& x : b) x = 0.3 * normal(rng) + 0.5;
    const double t = pooled_t(a, b);
    const auto r = mean_equality_test(a, b);
    EXPECT_NEAR(r.f_statistic, t * t, 1e-10 * std::max(1.0, t * t));
    EXPECT_GE(r.p_value, 0.0);
    EXPECT_LE(r.p_value, 1.0);
  }
}

TEST(MeanEqualityTest, PValueDecreasesInF) {
  double previous = 1.0;
  for (double f = 0.0; f < 50.0; f += 0.25) {
    const double p = f_distribution_sf(f, 1.0, 30.0);
    EXPECT_LE(p, previous);
    previous = p;
  }
  EXPECT_EQ(f_distribution_sf(0.0, 1.0, 5.0), 1.0);
  EXPECT_EQ(f_distribution_sf(INFINITY, 1.0, 5.0), 0.0);
  // F(1, d) with d large approaches chi-squared(1): P[X >= 3.841459] = 0.05.
  EXPECT_NEAR(f_distribution_sf(3.841459, 1.0, 1e7), 0.05, 1e-5);
}

TEST(UniformBelow, CoversRangeWithoutBias) {
  SurrogateEngine engine(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 70000; ++i) ++hits[uniform_below(engine, 7)];
  for (int h : hits) EXPECT_NEAR(h, 10000, 500);
  EXPECT_EQ(uniform_below(engine, 1), 0u);
  EXPECT_EQ(uniform_below(engine, 0), 0u);
}

TEST(Engine, PublishedReferenceOutput) {
  // The standard fixes the 10000th output of a default-seeded mt19937_64.
  SurrogateEngine engine;
  engine.discard(9999);
  EXPECT_EQ(engine(), 9981545732273789042ull);
}

TEST(ShuffleSurrogate, PreservesMultisetAndDropsLabels) {
  const TimeSeries series("rate", {5, 3, 3, 9, 1, 0.5, 7},
                          std::vector<std::string>{"a", "b", "c", "d", "e", "f", "g"});
  const auto shuffled = shuffle_surrogate(series, 123);
  EXPECT_FALSE(shuffled.has_labels());
  EXPECT_EQ(shuffled.name(), "rate-shuffled");
  std::vector<double> a(series.values().begin(), series.values().end());
  std::vector<double> b(shuffled.values().begin(), shuffled.values().end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
}

TEST(ShuffleSurrogate, SingleValueUnchanged) {
  const auto s = shuffle_surrogate(TimeSeries("x", {42.0}), 5);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.values()[0], 42.0);
}

TEST(ShuffleSurrogate, SeedDeterminism) {
  const auto series = synthetic::ar1(500, 0.5, 3);
  const auto a = shuffle_surrogate(series, 77);
  const auto b = shuffle_surrogate(series, 77);
  const auto c = shuffle_surrogate(series, 78);
  EXPECT_TRUE(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
  EXPECT_FALSE(std::equal(a.values().begin(), a.values().end(), c.values().begin()));
}

TEST(ShuffleSurrogate, PositionsAreUniform) {
  // Where does the first element land? Each of 5 slots about equally often.
  const TimeSeries series("x", {1, 2, 3, 4, 5});
  std::vector<int> landing(5, 0);
  for (std::uint64_t seed = 0; seed < 20000; ++seed) {
    const auto s = shuffle_surrogate(series, seed);
    for (std::size_t i = 0; i < 5; ++i) {
      if (s.values()[i] == 1.0) ++landing[i];
    }
  }
  for (int count : landing) EXPECT_NEAR(count, 4000, 250);
}

TEST(ShuffleSurrogate, RaisesEntropyAndLowersComplexityOfAutocorrelatedInput) {
  const WindowSpec spec{300, 20, OrdinalConfig{4, 1}, std::nullopt};
  int higher_h = 0, lower_c = 0;
  const int seeds = 20;
  for (int seed = 1; seed <= seeds; ++seed) {
    const auto series = synthetic::ar1(3996, 0.99, 1000 + seed);
    const auto original = slide(series, spec);
    const auto surrogate = slide(shuffle_surrogate(series, seed), spec);
    const auto ho = summarize(trajectory_entropies(original)).mean;
    const auto hs = summarize(trajectory_entropies(surrogate)).mean;
    const auto co = summarize(trajectory_complexities(original)).mean;
    const auto cs = summarize(trajectory_complexities(surrogate)).mean;
    higher_h += hs > ho;
    lower_c += cs < co;
  }
  EXPECT_GE(higher_h, 19);
  EXPECT_GE(lower_c, 19);
}

}  // namespace
}  // namespace cecp
