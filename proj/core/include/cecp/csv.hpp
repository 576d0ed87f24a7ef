#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "cecp/time_series.hpp"

namespace cecp {

// Splits one CSV record. Double-quoted fields may contain commas and "" as an
// escaped quote; embedded newlines are not supported.
std::vector<std::string> split_csv_record(std::string_view line);

// Reads a headed CSV of dated observations. Rows are kept in file order;
// the date column (optional, pass an empty name to skip it) is copied
// verbatim into the labels. Data rows are numbered from 1, excluding the
// header, and errors name the row.
//
// Throws DataError on: missing or empty file, duplicate header names, a
// missing column, a short row, or a blank/unparseable/non-finite value.
TimeSeries parse_csv(std::istream& in, std::string_view date_column,
                     std::string_view value_column, std::string name,
                     std::string_view source = "<stream>");

TimeSeries ingest_csv(const std::filesystem::path& path,
                      std::string_view date_column,
                      std::string_view value_column, std::string name = {});

}  // namespace cecp
