#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dompoly {

/// Exact nonnegative counts. Every count in this library is produced by
/// sums of nonnegative terms, so the signed backing type never goes negative.
using Count = boost::multiprecision::cpp_int;

std::string to_decimal(const Count& c);

/// Parses a plain decimal numeral (digits only, no sign, no whitespace).
/// Throws std::invalid_argument otherwise.
Count parse_count(std::string_view text);

}  // namespace dompoly
