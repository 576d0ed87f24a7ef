#pragma once

// Minimum and maximum statistical-complexity envelopes of the
// complexity-entropy plane for an alphabet of M symbols.
//
// Lower curve: P(p) = {p, (1-p)/(M-1), ..., (1-p)/(M-1)}, p in [1/M, 1].
// Upper curve: the families with n zero components (n = 0 .. M-2), one
// component p in [0, 1/(M-n)] and M-n-1 components (1-p)/(M-n-1). Family n
// spans H in [ln(M-n-1)/ln M, ln(M-n)/ln M], so the families tile [0, 1] and
// the pointwise maximum is piecewise, with kinks at H = ln k / ln M.
//
// Curves are sampled on a uniform H grid; for each target H the family
// parameter p is found by bisection (H is monotone in p inside a family).
// The upper curve additionally carries the exact kink points.

#include <cstddef>
#include <vector>

#include "cecp/quantifiers.hpp"

namespace cecp {

inline constexpr std::size_t kDefaultBoundsGrid = 2000;
inline constexpr double kBoundsTolerance = 1e-9;

// One point of a bounding family together with its generating parameters,
// so the distribution can be rebuilt and re-evaluated independently.
struct FamilyPoint {
  double entropy = 0.0;     // H
  double complexity = 0.0;  // C
  double p = 0.0;           // probability of the distinguished component
  std::size_t zeros = 0;    // number of zero components
};

// Closed-form evaluation of the distribution with one component p, `zeros`
// zero components and the remaining M - zeros - 1 components sharing 1 - p.
FamilyPoint family_point(std::size_t alphabet_size, std::size_t zeros,
                         double p);

// The explicit distribution behind family_point, for cross-checking.
std::vector<double> family_distribution(std::size_t alphabet_size,
                                        std::size_t zeros, double p);

FamilyPoint min_family_point(std::size_t alphabet_size, double p);
FamilyPoint max_family_point(std::size_t alphabet_size, std::size_t zeros,
                             double p);

// Points on the curve at (approximately) the requested entropy; the returned
// point's entropy is the one actually realised by the solved p.
FamilyPoint min_complexity_at(std::size_t alphabet_size, double entropy);
FamilyPoint max_complexity_at(std::size_t alphabet_size, double entropy);

// grid_size uniform H samples (plus kinks for the upper curve), sorted by
// strictly increasing H, starting at (0, 0) and ending at (1, 0).
// Throws PreconditionError unless M >= 2 and grid_size >= 2.
std::vector<FamilyPoint> min_complexity_curve(
    std::size_t alphabet_size, std::size_t grid_size = kDefaultBoundsGrid);
std::vector<FamilyPoint> max_complexity_curve(
    std::size_t alphabet_size, std::size_t grid_size = kDefaultBoundsGrid);

struct BoundsSample {
  double entropy = 0.0;
  double c_min = 0.0;
  double c_max = 0.0;
};

class BoundsCurve {
 public:
  BoundsCurve(std::size_t alphabet_size, std::vector<BoundsSample> samples);

  // Samples both envelopes on the union of the uniform grid and the kinks.
  static BoundsCurve build(std::size_t alphabet_size,
                           std::size_t grid_size = kDefaultBoundsGrid);

  std::size_t alphabet_size() const { return alphabet_size_; }
  const std::vector<BoundsSample>& samples() const { return samples_; }

  // Linear interpolation between neighbouring samples.
  // Throws DomainError when H lies outside [0, 1].
  double c_min(double entropy) const;
  double c_max(double entropy) const;

 private:
  BoundsSample interpolate(double entropy) const;

  std::size_t alphabet_size_;
  std::vector<BoundsSample> samples_;
};

// c_min(H) - tol <= C <= c_max(H) + tol.
bool in_bounds(double entropy, double complexity, const BoundsCurve& curve,
               double tolerance = kBoundsTolerance);
bool in_bounds(const Quantifiers& q, const BoundsCurve& curve,
               double tolerance = kBoundsTolerance);

}  // namespace cecp
