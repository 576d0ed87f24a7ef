#pragma once

// Permutation information quantifiers: Shannon entropy, its normalized form,
// the Jensen-Shannon disequilibrium against the uniform distribution, and
// the statistical complexity C = Q_J * H.

#include <cstddef>
#include <span>

#include "cecp/ordinal.hpp"

namespace cecp {

struct Quantifiers {
  double shannon = 0.0;             // S[P], nats
  double normalized_entropy = 0.0;  // H = S / ln M
  double disequilibrium = 0.0;      // Q_J[P, Pe]
  double complexity = 0.0;          // C = Q_J * H
  std::size_t alphabet_size = 0;    // M
};

// Tolerance on |sum(p) - 1| accepted by the functions below.
inline constexpr double kProbabilitySumTolerance = 1e-9;

// -sum p ln p with 0 ln 0 = 0. Throws DomainError on negative, non-finite, or
// non-normalized input.
double shannon_entropy(std::span<const double> p);
double shannon_entropy(const PatternDistribution& p);

// S[P] / ln M. Throws PreconditionError when M < 2.
double normalized_entropy(std::span<const double> p);
double normalized_entropy(const PatternDistribution& p);

// Q0 such that the disequilibrium of a delta distribution against the
// uniform one equals 1:
//   Q0 = -2 / ( (M+1)/M ln(M+1) - 2 ln(2M) + ln M )
double disequilibrium_normalization(std::size_t alphabet_size);

// Q0 * { S[(P + Pe)/2] - S[P]/2 - S[Pe]/2 }, clamped to [0, 1].
// Throws ShapeError when the sizes differ.
double disequilibrium(std::span<const double> p, std::span<const double> pe);

// Disequilibrium against the uniform distribution on p.size() bins.
double disequilibrium_uniform(std::span<const double> p);

Quantifiers statistical_complexity(std::span<const double> p);
Quantifiers statistical_complexity(const PatternDistribution& p);

}  // namespace cecp
