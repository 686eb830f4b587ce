#include "soco/csv.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace soco::csv {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

void write_file(const std::string& path, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path, std::ios::binary);  // binary: no platform newline surprises
  if (!out) throw std::runtime_error("csv: cannot open for writing: " + path);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    if (row.size() != header.size()) {
      throw std::runtime_error("csv: row width " + std::to_string(row.size()) +
                               " does not match header width " + std::to_string(header.size()));
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("csv: write failed: " + path);
}

Table read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("csv: cannot open: " + path);
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: empty file: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  t.header = split_line(line);
  std::size_t row_no = 0;
  while (std::getline(in, line)) {
    ++row_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_line(line);
    if (cells.size() != t.header.size()) {
      throw std::runtime_error("csv: " + path + ": row " + std::to_string(row_no) + " has " +
                               std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(t.header.size()));
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

double parse_double(const std::string& cell, const std::string& path, std::size_t row) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(cell, &pos);
    if (pos != cell.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("csv: " + path + ": row " + std::to_string(row) +
                             ": not a number: '" + cell + "'");
  }
}

std::int64_t parse_int(const std::string& cell, const std::string& path, std::size_t row) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(cell, &pos);
    if (pos != cell.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("csv: " + path + ": row " + std::to_string(row) +
                             ": not an integer: '" + cell + "'");
  }
}

}  // namespace soco::csv
