#pragma once

/**
 * @file cli.hpp
 * @brief The `dompoly` command line, usable in-process.
 *
 *   dompoly <table|poly|family|verify|gf|identities> [args]
 *           [--format csv|json|latex|plain] [--cache PATH] [--force] [--strict] [--json]
 *
 * Exit codes: 0 success, 1 verification failure, 2 argument error,
 * 3 size-guard refusal, 4 construction assertion failure.
 */

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dompoly/core.hpp"
#include "dompoly/genfunc.hpp"
#include "dompoly/identities.hpp"
#include "dompoly/polynomial.hpp"
#include "dompoly/recurrence.hpp"

namespace dompoly::cli {

enum class OutputFormat { csv, json, latex, plain };

OutputFormat parse_format(std::string_view text);

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kArgumentError = 2,
  kSizeGuardRefusal = 3,
  kConstructionFailure = 4,
};

/// Process environment consulted by the CLI.
struct Environment {
  std::optional<std::string> cache_path;     ///< DOMPOLY_CACHE
  std::optional<std::string> oracle_budget;  ///< DOMPOLY_ORACLE_BUDGET
  static Environment from_process();
};

/// Rows n = 1..n_max, columns j = 1..n_max, zeros explicit. LaTeX leaves
/// the cells with j > n blank, as a printed triangle.
std::string render_table(const DominationTable& table, std::size_t n_max, OutputFormat format);

std::string render_polynomial(const DominationPolynomial& p, OutputFormat format);

/// plain: bare JSON array of label arrays; json: {"n","i","sets"}.
std::string render_family(const Family& family, OutputFormat format);

/// Coefficient grid of u^n v^j for n = 4..order, j = 1..order.
std::string render_series(const BivariateSeries& series, OutputFormat format,
                          const std::vector<Discrepancy>& discrepancies);

std::string render_identities(const std::vector<IdentityCheck>& checks, OutputFormat format);

/// @p args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env);

}  // namespace dompoly::cli
