#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace soco::csv {

// Floating-point cells use 17 significant digits so a write/read round trip
// reproduces every double bit-for-bit.
std::string format_double(double v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Writes header + rows; every row must match the header's column count.
void write_file(const std::string& path, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);

// Reads a whole file; rejects missing files, empty files, and rows whose
// column count disagrees with the header, naming the offending row number.
Table read_file(const std::string& path);

// Strict numeric parsers; `row` is the 1-based data row used in diagnostics.
double parse_double(const std::string& cell, const std::string& path, std::size_t row);
std::int64_t parse_int(const std::string& cell, const std::string& path, std::size_t row);

}  // namespace soco::csv
