#include "dompoly/polynomial.hpp"

namespace dompoly {

Count DominationPolynomial::evaluate(const Count& x) const {
  Count acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string DominationPolynomial::to_string() const {
  std::string out;
  for (std::size_t p = coeffs.size(); p-- > 0;) {
    const Count& c = coeffs[p];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || p == 0) out += to_decimal(c);
    if (p >= 1) out += 'x';
    if (p >= 2) out += '^' + std::to_string(p);
  }
  return out.empty() ? "0" : out;
}

}  // namespace dompoly
