#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "dompoly/recurrence.hpp"

namespace dompoly {

namespace {
constexpr std::string_view kMagic = "DOMPOLY-TABLE v1 n_max=";
}

void write_cache(std::ostream& out, const DominationTable& table) {
  out << kMagic << table.n_max() << '\n';
  for (std::size_t n = 1; n <= table.n_max(); ++n) {
    const auto row = table.row(n);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ' ';
      out << to_decimal(row[i]);
    }
    out << '\n';
  }
}

DominationTable read_cache(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || !line.starts_with(kMagic)) {
    throw CacheFormatError("cache: missing 'DOMPOLY-TABLE v1' header");
  }
  std::size_t n_max = 0;
  try {
    const std::string digits = line.substr(kMagic.size());
    n_max = static_cast<std::size_t>(std::stoull(digits));
    if (std::to_string(n_max) != digits || n_max < 1) throw std::invalid_argument(digits);
  } catch (const std::exception&) {
    throw CacheFormatError("cache: bad n_max in header '" + line + "'");
  }

  std::vector<std::vector<Count>> rows;
  rows.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (!std::getline(in, line)) {
      throw CacheFormatError("cache: file ends before row " + std::to_string(n));
    }
    std::vector<Count> row;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ' ')) {
      try {
        row.push_back(parse_count(field));
      } catch (const std::invalid_argument& e) {
        throw CacheFormatError("cache: row " + std::to_string(n) + ": " + e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  if (std::getline(in, line)) {
    throw CacheFormatError("cache: trailing data after row " + std::to_string(n_max));
  }
  try {
    return DominationTable::from_rows(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw CacheFormatError(std::string("cache: ") + e.what());
  }
}

}  // namespace dompoly
