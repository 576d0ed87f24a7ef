#include "cecp/time_series.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "cecp/errors.hpp"

namespace cecp {

TimeSeries::TimeSeries(std::string name, std::vector<double> values,
                       std::optional<std::vector<std::string>> labels)
    : name_(std::move(name)),
      values_(std::move(values)),
      labels_(std::move(labels)) {
  if (values_.empty()) {
    throw PreconditionError("time series '" + name_ + "' is empty");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DomainError("time series '" + name_ + "' has a non-finite value at row " +
                        std::to_string(i + 1));
    }
  }
  if (labels_ && labels_->size() != values_.size()) {
    throw ShapeError("time series '" + name_ + "' has " +
                     std::to_string(labels_->size()) + " labels for " +
                     std::to_string(values_.size()) + " values");
  }
}

std::string TimeSeries::row_label(std::size_t row) const {
  if (row == 0 || row > values_.size()) {
    throw PreconditionError("row " + std::to_string(row) + " outside [1, " +
                            std::to_string(values_.size()) + "]");
  }
  if (labels_) return (*labels_)[row - 1];
  return std::to_string(row);
}

TimeSeries TimeSeries::slice(std::size_t first, std::size_t count) const {
  if (first + count > values_.size() || count == 0) {
    throw PreconditionError("slice [" + std::to_string(first) + ", " +
                            std::to_string(first + count) + ") outside series of length " +
                            std::to_string(values_.size()));
  }
  std::vector<double> values(values_.begin() + static_cast<std::ptrdiff_t>(first),
                             values_.begin() + static_cast<std::ptrdiff_t>(first + count));
  std::optional<std::vector<std::string>> labels;
  if (labels_) {
    labels.emplace(labels_->begin() + static_cast<std::ptrdiff_t>(first),
                   labels_->begin() + static_cast<std::ptrdiff_t>(first + count));
  }
  return TimeSeries(name_, std::move(values), std::move(labels));
}

TimeSeries TimeSeries::first_difference() const {
  if (values_.size() < 2) {
    throw PreconditionError("first difference of '" + name_ +
                            "' needs at least 2 observations");
  }
  std::vector<double> diff(values_.size() - 1);
  for (std::size_t i = 1; i < values_.size(); ++i) {
    diff[i - 1] = values_[i] - values_[i - 1];
  }
  std::optional<std::vector<std::string>> labels;
  if (labels_) labels.emplace(labels_->begin() + 1, labels_->end());
  return TimeSeries(name_, std::move(diff), std::move(labels));
}

}  // namespace cecp
