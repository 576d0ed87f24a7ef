#include "cecp/quantifiers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cecp/errors.hpp"

namespace cecp {

namespace {

double x_ln_x(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

void require_distribution(std::span<const double> p) {
  if (p.empty()) throw DomainError("empty probability vector");
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError("probability vector has a negative or non-finite entry");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kProbabilitySumTolerance) {
    throw DomainError("probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

void require_alphabet(std::size_t m) {
  if (m < 2) {
    throw PreconditionError("normalized entropy is undefined for M = " +
                            std::to_string(m) + " < 2");
  }
}

double entropy_unchecked(std::span<const double> p) {
  double s = 0.0;
  for (double v : p) s -= x_ln_x(v);
  return s;
}

}  // namespace

double shannon_entropy(std::span<const double> p) {
  require_distribution(p);
  return entropy_unchecked(p);
}

double shannon_entropy(const PatternDistribution& p) {
  return shannon_entropy(p.probabilities);
}

double normalized_entropy(std::span<const double> p) {
  require_alphabet(p.size());
  return std::clamp(shannon_entropy(p) / std::log(static_cast<double>(p.size())),
                    0.0, 1.0);
}

double normalized_entropy(const PatternDistribution& p) {
  return normalized_entropy(p.probabilities);
}

double disequilibrium_normalization(std::size_t alphabet_size) {
  require_alphabet(alphabet_size);
  const auto m = static_cast<double>(alphabet_size);
  return -2.0 / ((m + 1.0) / m * std::log(m + 1.0) - 2.0 * std::log(2.0 * m) +
                 std::log(m));
}

double disequilibrium(std::span<const double> p, std::span<const double> pe) {
  if (p.size() != pe.size()) {
    throw ShapeError("disequilibrium of distributions with " +
                     std::to_string(p.size()) + " and " + std::to_string(pe.size()) +
                     " bins");
  }
  require_distribution(p);
  require_distribution(pe);
  double s_mix = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s_mix -= x_ln_x(0.5 * (p[i] + pe[i]));
  const double js = s_mix - 0.5 * entropy_unchecked(p) - 0.5 * entropy_unchecked(pe);
  return std::clamp(disequilibrium_normalization(p.size()) * js, 0.0, 1.0);
}

double disequilibrium_uniform(std::span<const double> p) {
  const std::vector<double> uniform(p.size(), 1.0 / static_cast<double>(p.size()));
  return disequilibrium(p, uniform);
}

Quantifiers statistical_complexity(std::span<const double> p) {
  require_alphabet(p.size());
  Quantifiers q;
  q.alphabet_size = p.size();
  q.shannon = shannon_entropy(p);
  q.normalized_entropy =
      std::clamp(q.shannon / std::log(static_cast<double>(p.size())), 0.0, 1.0);
  q.disequilibrium = disequilibrium_uniform(p);
  q.complexity = q.disequilibrium * q.normalized_entropy;
  return q;
}

Quantifiers statistical_complexity(const PatternDistribution& p) {
  return statistical_complexity(p.probabilities);
}

}  // namespace cecp
