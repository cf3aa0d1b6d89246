#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#ifndef LAGMULT_BUILD_ID
#define LAGMULT_BUILD_ID "unknown"
#endif

namespace lagmult::tools {

const char* build_id() { return LAGMULT_BUILD_ID; }

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != columns_.size()) {
    throw std::logic_error("CSV row has " + std::to_string(row.size()) + " cells, header has " +
                           std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(row));
}

std::string CsvTable::render(const std::string& experiment, const std::string& config_line) const {
  std::string s;
  s += "# " + std::string(kCsvSchema) + " " + experiment + "\n";
  s += "# config: " + config_line + "\n";
  s += "# build: " + std::string(build_id()) + "\n";
  auto emit = [&s](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += ',';
      s += cells[i];
    }
    s += '\n';
  };
  emit(columns_);
  for (const auto& r : rows_) emit(r);
  return s;
}

std::string cell(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string cell(long long v) { return std::to_string(v); }

std::string cell(bool v) { return v ? "1" : "0"; }

}  // namespace lagmult::tools
