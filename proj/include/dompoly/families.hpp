#pragma once

/**
 * @file families.hpp
 * @brief Explicit construction of the family of dominating sets of C_n with
 *        i vertices from the families of C_{n-1}, C_{n-2}, C_{n-3} with i-1.
 *
 * For n >= 4 the construction is chosen by which parent families are empty:
 *
 *   (i)   only C_{n-3} nonempty (n = 3k, i = k): the three residue classes
 *         {1,4,...}, {2,5,...}, {3,6,...};
 *   (ii)  only C_{n-1} nonempty (i = n): [n];
 *   (iii) C_{n-1} empty (n = 3k+2, i = k+1): three shifted progressions plus
 *         every X of C_{n-3} extended by n-2 if 1 in X, else n-1 if 2 in X,
 *         else n;
 *   (iv)  C_{n-3} empty (i = n-1): [n] minus one vertex;
 *   (v)   all nonempty: three disjoint streams
 *           X + {n}                          for X in C_{n-1},
 *           X + {n}    if (n-2 or n-3 in X) and X not in C_{n-1},
 *           X + {n-1}  otherwise,            for X in C_{n-2},
 *           X + {n-2 | n-1 | n} by the rule of (iii), for X in C_{n-3}.
 *
 * Parent families are compared as label sets ("X in C_{n-1}" means the same
 * labels also dominate C_{n-1}). Every candidate is re-checked against the
 * domination predicate and the final size against the recurrence count.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dompoly/core.hpp"
#include "dompoly/count.hpp"

namespace dompoly {

struct FamilyOptions {
  /// build_family refuses when d(C_n, i) exceeds this, unless @c force.
  Count size_guard = 1'000'000;
  bool force = false;
};

struct FamilyReport {
  std::size_t n = 0;
  std::size_t i = 0;
  Count constructed_count = 0;
  Count expected_count = 0;
  bool all_dominating = true;
  bool all_distinct = true;
  bool rotation_closed = true;
  bool streams_disjoint = true;
  /// Human-readable descriptions of whatever went wrong, first few only.
  std::vector<std::string> problems;

  bool passed() const {
    return constructed_count == expected_count && all_dominating && all_distinct &&
           rotation_closed && streams_disjoint;
  }
  std::string to_string() const;
};

struct SizeGuardError : std::runtime_error {
  SizeGuardError(std::size_t n, std::size_t i, const Count& size, const Count& guard);
  Count size;
};

struct ConstructionError : std::runtime_error {
  explicit ConstructionError(FamilyReport r);
  FamilyReport report;
};

/// Hardcoded families for n <= 3. For n in {1, 2} these are formal families
/// of the sizes of the base rows. Throws std::invalid_argument for n > 3.
Family base_family(std::size_t n, std::size_t i);

/// The family for (n, i); empty outside ceil(n/3) <= i <= n.
/// Throws SizeGuardError, or ConstructionError if any check fails.
Family build_family(std::size_t n, std::size_t i, const FamilyOptions& options = {});

/// Builds and checks the family without throwing on check failures.
/// Requires n >= 3. Ignores the size guard.
FamilyReport verify_family(std::size_t n, std::size_t i);

/// True iff rotating every member by one position yields the same family.
bool is_rotation_closed(const Family& family);

}  // namespace dompoly
