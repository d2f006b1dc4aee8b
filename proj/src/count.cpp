#include "dompoly/count.hpp"

#include <algorithm>
#include <stdexcept>

namespace dompoly {

std::string to_decimal(const Count& c) { return c.str(); }

Count parse_count(std::string_view text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw std::invalid_argument("not a decimal count: '" + std::string(text) + "'");
  }
  Count value = 0;
  for (char ch : text) value = value * 10 + (ch - '0');
  return value;
}

}  // namespace dompoly
