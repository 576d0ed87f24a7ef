#include "cecp/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <string>

#include "cecp/errors.hpp"

namespace cecp {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::size_t find_column(const std::vector<std::string>& header, std::string_view column,
                        std::string_view source) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == column) return i;
  }
  throw DataError(std::string(source) + ": no column named '" + std::string(column) + "'");
}

}  // namespace

std::vector<std::string> split_csv_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back(trim(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.emplace_back(trim(field));
  return fields;
}

TimeSeries parse_csv(std::istream& in, std::string_view date_column,
                     std::string_view value_column, std::string name,
                     std::string_view source) {
  const std::string where(source);
  std::string line;
  if (!std::getline(in, line)) throw DataError(where + ": file is empty");
  if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
  const auto header = split_csv_record(line);

  std::set<std::string> seen;
  for (const auto& column : header) {
    if (!seen.insert(column).second) {
      throw DataError(where + ": duplicate header column '" + column + "'");
    }
  }
  const std::size_t value_index = find_column(header, value_column, where);
  std::optional<std::size_t> date_index;
  if (!date_column.empty()) date_index = find_column(header, date_column, where);

  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();

  std::vector<double> values;
  std::vector<std::string> labels;
  values.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string row = "row " + std::to_string(i + 1);
    if (trim(lines[i]).empty()) throw DataError(where + ": " + row + " is empty");
    const auto fields = split_csv_record(lines[i]);
    if (fields.size() != header.size()) {
      throw DataError(where + ": " + row + " has " + std::to_string(fields.size()) +
                      " fields, header has " + std::to_string(header.size()));
    }
    const std::string& raw = fields[value_index];
    const auto value = parse_number(raw);
    if (!value) {
      throw DataError(where + ": " + row + ": cannot parse '" + raw + "' in column '" +
                      std::string(value_column) + "' as a number");
    }
    if (!std::isfinite(*value)) {
      throw DataError(where + ": " + row + ": non-finite value '" + raw + "'");
    }
    values.push_back(*value);
    if (date_index) labels.push_back(fields[*date_index]);
  }
  if (values.empty()) throw DataError(where + ": no data rows");

  std::optional<std::vector<std::string>> maybe_labels;
  if (date_index) maybe_labels = std::move(labels);
  return TimeSeries(std::move(name), std::move(values), std::move(maybe_labels));
}

TimeSeries ingest_csv(const std::filesystem::path& path, std::string_view date_column,
                      std::string_view value_column, std::string name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  if (name.empty()) name = path.stem().string();
  return parse_csv(in, date_column, value_column, std::move(name), path.string());
}

}  // namespace cecp
