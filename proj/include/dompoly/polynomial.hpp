#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dompoly/count.hpp"

namespace dompoly {

/// D(C_n, x) as ascending coefficients: coeffs[i] multiplies x^i, i = 0..n.
struct DominationPolynomial {
  std::size_t n = 0;
  std::vector<Count> coeffs;

  std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const Count& operator[](std::size_t i) const { return coeffs.at(i); }
  Count evaluate(const Count& x) const;

  /// Descending-power text such as "x^3 + 3x^2 + 3x".
  std::string to_string() const;

  friend bool operator==(const DominationPolynomial&, const DominationPolynomial&) = default;
};

}  // namespace dompoly
