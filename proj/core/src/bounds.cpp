#include "cecp/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cecp/errors.hpp"

namespace cecp {

namespace {

constexpr int kBisectionSteps = 200;

double x_ln_x(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

void require_curve_args(std::size_t alphabet_size, std::size_t grid_size) {
  if (alphabet_size < 2) {
    throw PreconditionError("bounds need M >= 2, got " + std::to_string(alphabet_size));
  }
  if (grid_size < 2) {
    throw PreconditionError("bounds grid needs at least 2 samples, got " +
                            std::to_string(grid_size));
  }
}

double require_entropy(double entropy) {
  if (!(entropy >= -kBoundsTolerance && entropy <= 1.0 + kBoundsTolerance)) {
    throw DomainError("normalized entropy " + std::to_string(entropy) +
                      " outside [0, 1]");
  }
  return std::clamp(entropy, 0.0, 1.0);
}

// Bisection on p over [lo, hi] for a family whose entropy moves monotonically
// with p; `increasing` tells the direction.
template <typename Eval>
FamilyPoint solve_for_entropy(Eval eval, double lo, double hi, bool increasing,
                              double target) {
  FamilyPoint best_lo = eval(lo);
  FamilyPoint best_hi = eval(hi);
  for (int i = 0; i < kBisectionSteps; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const FamilyPoint point = eval(mid);
    const bool below = point.entropy < target;
    if (below == increasing) {
      lo = mid;
      best_lo = point;
    } else {
      hi = mid;
      best_hi = point;
    }
  }
  return std::abs(best_lo.entropy - target) <= std::abs(best_hi.entropy - target)
             ? best_lo
             : best_hi;
}

std::vector<double> uniform_grid(std::size_t grid_size) {
  std::vector<double> grid(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    grid[i] = static_cast<double>(i) / static_cast<double>(grid_size - 1);
  }
  grid.back() = 1.0;
  return grid;
}

// H of the uniform distribution on k of the M symbols: the joints between
// neighbouring maximum-complexity families.
std::vector<double> kink_entropies(std::size_t alphabet_size) {
  const double log_m = std::log(static_cast<double>(alphabet_size));
  std::vector<double> kinks;
  kinks.reserve(alphabet_size);
  for (std::size_t k = 2; k < alphabet_size; ++k) {
    kinks.push_back(std::log(static_cast<double>(k)) / log_m);
  }
  return kinks;
}

template <typename Point, typename Key>
void sort_strictly_increasing(std::vector<Point>& points, Key key) {
  std::sort(points.begin(), points.end(),
            [&](const Point& a, const Point& b) { return key(a) < key(b); });
  points.erase(std::unique(points.begin(), points.end(),
                           [&](const Point& a, const Point& b) {
                             return !(key(b) > key(a));
                           }),
               points.end());
}

}  // namespace

FamilyPoint family_point(std::size_t alphabet_size, std::size_t zeros, double p) {
  if (alphabet_size < 2 || zeros + 1 > alphabet_size) {
    throw PreconditionError("family with " + std::to_string(zeros) +
                            " zeros does not fit M = " + std::to_string(alphabet_size));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("family parameter p = " + std::to_string(p) + " outside [0, 1]");
  }
  const std::size_t others = alphabet_size - zeros - 1;
  if (others == 0 && p != 1.0) {
    throw DomainError("single-support family requires p = 1");
  }
  const auto m = static_cast<double>(alphabet_size);
  const auto k = static_cast<double>(others);
  const double q = others == 0 ? 0.0 : (1.0 - p) / k;
  const double u = 1.0 / m;
  const double log_m = std::log(m);

  const double s = -x_ln_x(p) - k * x_ln_x(q);
  const double s_mix = -x_ln_x(0.5 * (p + u)) - k * x_ln_x(0.5 * (q + u)) -
                       static_cast<double>(zeros) * x_ln_x(0.5 * u);
  const double js = s_mix - 0.5 * s - 0.5 * log_m;

  FamilyPoint point;
  point.p = p;
  point.zeros = zeros;
  point.entropy = std::clamp(s / log_m, 0.0, 1.0);
  const double q_j = std::clamp(disequilibrium_normalization(alphabet_size) * js, 0.0, 1.0);
  point.complexity = q_j * point.entropy;
  return point;
}

std::vector<double> family_distribution(std::size_t alphabet_size, std::size_t zeros,
                                        double p) {
  if (alphabet_size < 2 || zeros + 1 > alphabet_size) {
    throw PreconditionError("family with " + std::to_string(zeros) +
                            " zeros does not fit M = " + std::to_string(alphabet_size));
  }
  const std::size_t others = alphabet_size - zeros - 1;
  std::vector<double> dist(alphabet_size, 0.0);
  dist[0] = p;
  for (std::size_t i = 1; i <= others; ++i) {
    dist[i] = (1.0 - p) / static_cast<double>(others);
  }
  return dist;
}

FamilyPoint min_family_point(std::size_t alphabet_size, double p) {
  if (alphabet_size >= 2 && p < 1.0 / static_cast<double>(alphabet_size)) {
    throw DomainError("lower-bound family needs p >= 1/M");
  }
  return family_point(alphabet_size, 0, p);
}

FamilyPoint max_family_point(std::size_t alphabet_size, std::size_t zeros, double p) {
  if (zeros + 2 > alphabet_size) {
    throw PreconditionError("upper-bound family needs zeros <= M - 2");
  }
  if (p > 1.0 / static_cast<double>(alphabet_size - zeros)) {
    throw DomainError("upper-bound family needs p <= 1/(M - zeros)");
  }
  return family_point(alphabet_size, zeros, p);
}

FamilyPoint min_complexity_at(std::size_t alphabet_size, double entropy) {
  require_curve_args(alphabet_size, 2);
  entropy = require_entropy(entropy);
  const double p_uniform = 1.0 / static_cast<double>(alphabet_size);
  if (entropy == 1.0) return family_point(alphabet_size, 0, p_uniform);
  if (entropy == 0.0) return family_point(alphabet_size, 0, 1.0);
  return solve_for_entropy(
      [&](double p) { return family_point(alphabet_size, 0, p); }, p_uniform, 1.0,
      /*increasing=*/false, entropy);
}

FamilyPoint max_complexity_at(std::size_t alphabet_size, double entropy) {
  require_curve_args(alphabet_size, 2);
  entropy = require_entropy(entropy);
  // Family with `support` = M - zeros - 1 equal components spans
  // H in [ln(support), ln(support + 1)] / ln M.
  const double log_m = std::log(static_cast<double>(alphabet_size));
  const double target = entropy * log_m;
  auto support = static_cast<std::size_t>(
      std::clamp(std::floor(std::exp(target)), 1.0,
                 static_cast<double>(alphabet_size - 1)));
  while (support > 1 && std::log(static_cast<double>(support)) > target) --support;
  while (support < alphabet_size - 1 &&
         std::log(static_cast<double>(support + 1)) < target) {
    ++support;
  }
  const std::size_t zeros = alphabet_size - support - 1;
  const double p_max = 1.0 / static_cast<double>(support + 1);
  if (entropy == 1.0) return family_point(alphabet_size, 0, p_max);
  return solve_for_entropy(
      [&](double p) { return family_point(alphabet_size, zeros, p); }, 0.0, p_max,
      /*increasing=*/true, entropy);
}

std::vector<FamilyPoint> min_complexity_curve(std::size_t alphabet_size,
                                              std::size_t grid_size) {
  require_curve_args(alphabet_size, grid_size);
  std::vector<FamilyPoint> curve;
  curve.reserve(grid_size);
  for (double h : uniform_grid(grid_size)) {
    curve.push_back(min_complexity_at(alphabet_size, h));
  }
  sort_strictly_increasing(curve, [](const FamilyPoint& f) { return f.entropy; });
  return curve;
}

std::vector<FamilyPoint> max_complexity_curve(std::size_t alphabet_size,
                                              std::size_t grid_size) {
  require_curve_args(alphabet_size, grid_size);
  std::vector<FamilyPoint> curve;
  curve.reserve(grid_size + alphabet_size);
  for (double h : uniform_grid(grid_size)) {
    curve.push_back(max_complexity_at(alphabet_size, h));
  }
  for (std::size_t k = 2; k < alphabet_size; ++k) {
    // Uniform on k symbols: family with M - k - 1 zeros at p = 0.
    curve.push_back(family_point(alphabet_size, alphabet_size - k - 1, 0.0));
  }
  sort_strictly_increasing(curve, [](const FamilyPoint& f) { return f.entropy; });
  return curve;
}

BoundsCurve::BoundsCurve(std::size_t alphabet_size, std::vector<BoundsSample> samples)
    : alphabet_size_(alphabet_size), samples_(std::move(samples)) {
  if (samples_.size() < 2) {
    throw PreconditionError("bounds curve needs at least 2 samples");
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    if (s.entropy < 0.0 || s.entropy > 1.0) {
      throw InvariantError("bounds sample entropy outside [0, 1]");
    }
    if (i > 0 && !(s.entropy > samples_[i - 1].entropy)) {
      throw InvariantError("bounds samples are not strictly increasing in H");
    }
    if (s.c_min > s.c_max + kBoundsTolerance) {
      throw InvariantError("bounds sample has c_min > c_max at H = " +
                           std::to_string(s.entropy));
    }
  }
}

BoundsCurve BoundsCurve::build(std::size_t alphabet_size, std::size_t grid_size) {
  require_curve_args(alphabet_size, grid_size);
  std::vector<double> entropies = uniform_grid(grid_size);
  const auto kinks = kink_entropies(alphabet_size);
  entropies.insert(entropies.end(), kinks.begin(), kinks.end());
  sort_strictly_increasing(entropies, [](double h) { return h; });

  std::vector<BoundsSample> samples;
  samples.reserve(entropies.size());
  for (double h : entropies) {
    samples.push_back({h, min_complexity_at(alphabet_size, h).complexity,
                       max_complexity_at(alphabet_size, h).complexity});
  }
  return BoundsCurve(alphabet_size, std::move(samples));
}

BoundsSample BoundsCurve::interpolate(double entropy) const {
  entropy = require_entropy(entropy);
  auto upper = std::lower_bound(
      samples_.begin(), samples_.end(), entropy,
      [](const BoundsSample& s, double h) { return s.entropy < h; });
  if (upper == samples_.begin()) return samples_.front();
  if (upper == samples_.end()) return samples_.back();
  const auto lower = upper - 1;
  const double t = (entropy - lower->entropy) / (upper->entropy - lower->entropy);
  return {entropy, lower->c_min + t * (upper->c_min - lower->c_min),
          lower->c_max + t * (upper->c_max - lower->c_max)};
}

double BoundsCurve::c_min(double entropy) const { return interpolate(entropy).c_min; }
double BoundsCurve::c_max(double entropy) const { return interpolate(entropy).c_max; }

bool in_bounds(double entropy, double complexity, const BoundsCurve& curve,
               double tolerance) {
  return curve.c_min(entropy) - tolerance <= complexity &&
         complexity <= curve.c_max(entropy) + tolerance;
}

bool in_bounds(const Quantifiers& q, const BoundsCurve& curve, double tolerance) {
  return in_bounds(q.normalized_entropy, q.complexity, curve, tolerance);
}

}  // namespace cecp
