#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cecp {

// Ordered real-valued observations with optional per-row date labels.
// Construction validates: at least one value, every value finite, and label
// count equal to value count when labels are present.
class TimeSeries {
 public:
  TimeSeries(std::string name, std::vector<double> values,
             std::optional<std::vector<std::string>> labels = std::nullopt);

  const std::string& name() const { return name_; }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool has_labels() const { return labels_.has_value(); }
  const std::optional<std::vector<std::string>>& labels() const {
    return labels_;
  }

  // Label of the 1-based row, or the row number itself when unlabelled.
  std::string row_label(std::size_t row) const;

  // Contiguous rows [first, first + count), 0-based, labels carried along.
  TimeSeries slice(std::size_t first, std::size_t count) const;

  // x[t] - x[t-1]; labels of the later row are kept. Requires size() >= 2.
  TimeSeries first_difference() const;

 private:
  std::string name_;
  std::vector<double> values_;
  std::optional<std::vector<std::string>> labels_;
};

}  // namespace cecp
