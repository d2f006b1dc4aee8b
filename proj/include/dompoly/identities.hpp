#pragma once

/**
 * @file identities.hpp
 * @brief Checks of the closed-form coefficient properties of D(C_n, x)
 *        against the recurrence table.
 *
 *   I     d(C_{3k}, k) = 3                                   k >= 1
 *   II    the recurrence itself (holds by construction)
 *   III   d(C_{3k+2}, k+1) = 3k + 2                          k >= 1
 *   IV    d(C_{3k+1}, k+1) = (k(3k+7) + 2) / 2               k >= 1
 *   V     d(C_n, n) = 1                                      n >= 3
 *   VI    d(C_n, n-1) = n                                    n >= 3
 *   VII   d(C_n, n-2) = (n-1) n / 2                          n >= 3
 *   VIII  d(C_n, n-3) = (n-4) n (n+1) / 6                    n >= 4
 *   IX    sum_{i=j}^{3j} d(C_i, j) = 3 sum_{i=j-1}^{3j-3} d(C_i, j-1)   j >= 3
 *   X     1 = d(C_k,k) < ... < d(C_{2k},k) > ... > d(C_{3k},k) = 3     k >= 3
 *   XI    S_n = S_{n-1} + S_{n-2} + S_{n-3}, S_1..S_3 = 1, 3, 7
 */

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dompoly/recurrence.hpp"

namespace dompoly {

enum class IdentityId { I = 1, II, III, IV, V, VI, VII, VIII, IX, X, XI };

inline constexpr std::array<IdentityId, 11> kAllIdentities{
    IdentityId::I,   IdentityId::II,   IdentityId::III, IdentityId::IV,
    IdentityId::V,   IdentityId::VI,   IdentityId::VII, IdentityId::VIII,
    IdentityId::IX,  IdentityId::X,    IdentityId::XI};

std::string_view roman(IdentityId id);
/// Accepts roman numerals in either case; throws std::invalid_argument.
IdentityId parse_identity(std::string_view text);

struct Counterexample {
  std::size_t n = 0;
  std::size_t i = 0;
  std::string expected;
  std::string actual;
};

struct IdentityCheck {
  IdentityId id = IdentityId::I;
  std::string range;
  bool pass = true;
  std::optional<Counterexample> counterexample;
  /// Extra facts such as a sub-range on which a failing identity does hold.
  std::string note;
};

/// Evaluates one identity for all instances that fit in rows 1..n_max.
/// @p table is extended to n_max if shorter.
IdentityCheck check_identity(IdentityId id, std::size_t n_max, DominationTable& table);
IdentityCheck check_identity(IdentityId id, std::size_t n_max);

/// All eleven, in order. Throws std::invalid_argument for n_max < 9.
std::vector<IdentityCheck> check_all(std::size_t n_max);

}  // namespace dompoly
