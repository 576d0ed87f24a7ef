#include "cecp/window.hpp"

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cecp/bounds.hpp"
#include "cecp/errors.hpp"
#include "cecp/synthetic.hpp"

namespace cecp {
namespace {

WindowSpec default_spec() { return WindowSpec{300, 20, OrdinalConfig{4, 1}, std::nullopt}; }

TEST(WindowSpec, CountFormula) {
  auto spec = default_spec();
  EXPECT_EQ(spec.window_count(3996), 185u);  // floor(3696 / 20) + 1
  EXPECT_EQ(spec.window_count(300), 1u);
  EXPECT_EQ(spec.window_count(319), 1u);
  EXPECT_EQ(spec.window_count(320), 2u);
  EXPECT_EQ(spec.window_count(299), 0u);
  spec.max_windows = 184;
  EXPECT_EQ(spec.window_count(3996), 184u);
  EXPECT_EQ(spec.window_count(320), 2u);
}

TEST(WindowSpec, Validation) {
  EXPECT_TRUE(default_spec().validate().empty());
  WindowSpec tight{30, 1, OrdinalConfig{4, 2}, std::nullopt};  // (D-1)tau + D! = 30
  EXPECT_EQ(tight.validate().size(), 1u);                      // below 5 D! = 120
  tight.window_length = 29;
  EXPECT_THROW(tight.validate(), PreconditionError);
  WindowSpec zero_step{300, 0, OrdinalConfig{4, 1}, std::nullopt};
  EXPECT_THROW(zero_step.validate(), PreconditionError);
  WindowSpec zero_cap{300, 20, OrdinalConfig{4, 1}, 0};
  EXPECT_THROW(zero_cap.validate(), PreconditionError);
}

TEST(Slide, BookkeepingAndLabels) {
  const auto labels = synthetic::business_day_labels(3996, 1999, 5, 17);
  auto values = synthetic::white_noise(3996, 3).values();
  const TimeSeries series("libor", {values.begin(), values.end()}, labels);
  const auto t = slide(series, default_spec());
  ASSERT_EQ(t.results.size(), 185u);
  EXPECT_EQ(t.series_name, "libor");
  for (std::size_t k = 0; k < t.results.size(); ++k) {
    const auto& r = t.results[k];
    EXPECT_EQ(r.index, k + 1);
    EXPECT_EQ(r.begin_row, 1 + k * 20);
    EXPECT_EQ(r.end_row, k * 20 + 300);
    EXPECT_EQ(r.end_row - r.begin_row + 1, 300u);
    EXPECT_EQ(r.begin_label, labels[r.begin_row - 1]);
    EXPECT_EQ(r.end_label, labels[r.end_row - 1]);
  }
  EXPECT_EQ(t.results.front().begin_label, "1999-05-17");
  // 300 weekdays from Monday 17 May 1999 end on Friday 7 July 2000; the
  // next window starts 20 weekdays later.
  EXPECT_EQ(t.results.front().end_label, "2000-07-07");
  EXPECT_EQ(t.results[1].begin_label, "1999-06-14");
}

TEST(Slide, RowNumbersWithoutLabels) {
  const auto t = slide(synthetic::white_noise(340, 1), default_spec());
  ASSERT_EQ(t.results.size(), 3u);
  EXPECT_EQ(t.results[2].begin_label, "41");
  EXPECT_EQ(t.results[2].end_label, "340");
}

TEST(Slide, SingleWindowCoversWholeSeries) {
  const auto series = synthetic::white_noise(300, 11);
  const auto t = slide(series, default_spec());
  ASSERT_EQ(t.results.size(), 1u);
  const auto direct = statistical_complexity(pattern_distribution(series, OrdinalConfig{4, 1}));
  EXPECT_EQ(t.results[0].quantifiers.normalized_entropy, direct.normalized_entropy);
  EXPECT_EQ(t.results[0].quantifiers.complexity, direct.complexity);
}

TEST(Slide, TooShortSeries) {
  EXPECT_THROW(slide(synthetic::white_noise(299, 1), default_spec()), PreconditionError);
}

TEST(Slide, MonotoneSeriesSitsAtOrigin) {
  for (int d : {3, 4, 5}) {
    WindowSpec spec{300, 20, OrdinalConfig{d, 1}, std::nullopt};
    for (const auto& r : slide(synthetic::ramp(1000, 5.0, 0.25), spec).results) {
      EXPECT_EQ(r.quantifiers.normalized_entropy, 0.0);
      EXPECT_EQ(r.quantifiers.complexity, 0.0);
    }
  }
}

TEST(Slide, EachWindowMatchesManualExtraction) {
  std::vector<WindowSpec> specs = {
      default_spec(),
      WindowSpec{150, 7, OrdinalConfig{3, 2}, std::nullopt},
      WindowSpec{400, 33, OrdinalConfig{5, 1}, 5},
  };
  const auto series = synthetic::ar1(1500, 0.7, 42);
  for (const auto& spec : specs) {
    const auto t = slide(series, spec);
    EXPECT_EQ(t.results.size(), spec.window_count(series.size()));
    for (const auto& r : t.results) {
      const auto sub = series.slice(r.begin_row - 1, spec.window_length);
      const auto q = statistical_complexity(pattern_distribution(sub, spec.ordinal));
      ASSERT_EQ(r.quantifiers.normalized_entropy, q.normalized_entropy);
      ASSERT_EQ(r.quantifiers.complexity, q.complexity);
      ASSERT_EQ(r.quantifiers.shannon, q.shannon);
    }
  }
}

TEST(Slide, ThreadCountDoesNotChangeResults) {
  const auto series = synthetic::ar1(3996, 0.9, 5);
  const auto serial = slide(series, default_spec(), 1);
  for (unsigned threads : {2u, 3u, 8u, 500u}) {
    const auto parallel = slide(series, default_spec(), threads);
    ASSERT_EQ(parallel.results.size(), serial.results.size());
    for (std::size_t k = 0; k < serial.results.size(); ++k) {
      EXPECT_EQ(parallel.results[k].index, serial.results[k].index);
      EXPECT_EQ(parallel.results[k].quantifiers.shannon, serial.results[k].quantifiers.shannon);
      EXPECT_EQ(parallel.results[k].quantifiers.complexity,
                serial.results[k].quantifiers.complexity);
    }
  }
}

TEST(Slide, ResultsInsideComplexityBounds) {
  const auto curve = BoundsCurve::build(24);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (double phi : {0.0, 0.5, 0.99}) {
      for (const auto& r : slide(synthetic::ar1(2000, phi, seed), default_spec()).results) {
        EXPECT_TRUE(in_bounds(r.quantifiers, curve));
      }
    }
  }
}

TEST(Subsample, KeepsEveryRatioThWindow) {
  auto spec = default_spec();
  spec.max_windows = 184;
  const auto t = slide(synthetic::white_noise(3996, 9), spec);
  ASSERT_EQ(t.results.size(), 184u);

  const auto same = subsample_trajectory(t, 1);
  EXPECT_EQ(same.results.size(), 184u);

  const auto quarter = subsample_trajectory(t, 4);
  ASSERT_EQ(quarter.results.size(), 46u);
  for (std::size_t i = 0; i < quarter.results.size(); ++i) {
    EXPECT_EQ(quarter.results[i].index, 1 + 4 * i);
  }
  EXPECT_THROW(subsample_trajectory(t, 0), PreconditionError);
}

TEST(Subsample, TenWindowsRatioThree) {
  WindowSpec spec{300, 20, OrdinalConfig{4, 1}, std::nullopt};
  const auto t = slide(synthetic::white_noise(300 + 9 * 20, 2), spec);
  ASSERT_EQ(t.results.size(), 10u);
  std::vector<std::size_t> kept;
  for (const auto& r : subsample_trajectory(t, 3).results) kept.push_back(r.index);
  EXPECT_EQ(kept, (std::vector<std::size_t>{1, 4, 7, 10}));
}

}  // namespace
}  // namespace cecp
