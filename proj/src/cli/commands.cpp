#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dompoly/cli.hpp"
#include "dompoly/families.hpp"
#include "dompoly/oracle.hpp"

namespace dompoly::cli {

namespace {

/// User-facing problem that maps to a specific exit code.
struct CommandError : std::runtime_error {
  CommandError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

constexpr std::size_t kFamilySetCheckMax = 18;
constexpr std::size_t kIdentityDefaultMax = 200;

struct Options {
  std::size_t n = 0;
  std::size_t i = 0;
  std::string format;
  std::string cache;
  bool force = false;
  bool strict = false;
  bool json = false;
};

OutputFormat resolve_format(const Options& o, OutputFormat fallback) {
  if (o.json) return OutputFormat::json;
  return o.format.empty() ? fallback : parse_format(o.format);
}

DominationTable load_or_build(const std::filesystem::path& path, std::size_t n_max) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return DominationTable(n_max);
  std::ifstream in(path);
  if (!in) throw CommandError(kArgumentError, "cannot read cache " + path.string());
  try {
    DominationTable table = read_cache(in);
    table.extend_to(n_max);
    return table;
  } catch (const CacheFormatError& e) {
    throw CommandError(kArgumentError, path.string() + ": " + e.what());
  }
}

void store_cache(const std::filesystem::path& path, const DominationTable& table) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CommandError(kArgumentError, "cannot write cache " + path.string());
    write_cache(out, table);
    out.flush();
    if (!out) throw CommandError(kArgumentError, "cannot write cache " + path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw CommandError(kArgumentError, "cannot write cache " + path.string());
  }
}

int cmd_table(const Options& o, const Environment& env, std::ostream& out) {
  const OutputFormat format = resolve_format(o, OutputFormat::csv);
  std::string cache = o.cache;
  if (cache.empty() && env.cache_path) cache = *env.cache_path;
  if (cache.empty()) {
    out << render_table(DominationTable(o.n), o.n, format);
    return kSuccess;
  }
  DominationTable table = load_or_build(cache, o.n);
  store_cache(cache, table);
  out << render_table(table, o.n, format);
  return kSuccess;
}

int cmd_poly(const Options& o, std::ostream& out) {
  out << render_polynomial(polynomial(o.n), resolve_format(o, OutputFormat::plain));
  return kSuccess;
}

int cmd_family(const Options& o, std::ostream& out) {
  FamilyOptions fo;
  fo.force = o.force;
  const Family family = build_family(o.n, o.i, fo);
  out << render_family(family, resolve_format(o, OutputFormat::plain));
  return kSuccess;
}

int cmd_gf(const Options& o, std::ostream& out) {
  const BivariateSeries series = expand(o.n);
  DominationTable table(o.n);
  const auto discrepancies = compare_with_table(series, table);
  out << render_series(series, resolve_format(o, OutputFormat::csv), discrepancies);
  return discrepancies.empty() ? kSuccess : kVerificationFailure;
}

int cmd_identities(const Options& o, std::ostream& out) {
  const auto checks = check_all(o.n);
  out << render_identities(checks, resolve_format(o, OutputFormat::plain));
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  return ok ? kSuccess : kVerificationFailure;
}

OracleLimits oracle_limits(const Environment& env) {
  OracleLimits limits;
  if (env.oracle_budget) {
    const std::string& text = *env.oracle_budget;
    try {
      std::size_t used = 0;
      limits.max_subsets = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw CommandError(kArgumentError, "DOMPOLY_ORACLE_BUDGET is not a number: " + text);
    }
  }
  return limits;
}

enum class SuiteStatus { pass, fail, skipped };

struct Suite {
  std::string name;
  SuiteStatus status = SuiteStatus::pass;
  std::string range;
  std::string detail;

  void fail(const std::string& what) {
    if (status == SuiteStatus::fail) return;
    status = SuiteStatus::fail;
    detail = what;
  }
};

Suite suite_oracle_counts(std::size_t n_max, DominationTable& table, const OracleLimits& limits) {
  Suite s{"oracle-vs-recurrence", SuiteStatus::pass, "n=3.." + std::to_string(n_max), ""};
  for (std::size_t n = 3; n <= n_max; ++n) {
    try {
      const OracleRow row = oracle_row(n, limits);
      for (std::size_t i = 0; i <= n; ++i) {
        if (row.counts[i] != table.at(n, i)) {
          s.fail("n=" + std::to_string(n) + " i=" + std::to_string(i) + " oracle=" +
                 to_decimal(row.counts[i]) + " recurrence=" + to_decimal(table.at(n, i)));
        }
      }
    } catch (const OracleLimitError& e) {
      if (s.status == SuiteStatus::pass) s.status = SuiteStatus::skipped;
      s.detail = std::string(e.what()) + "; checked n=3.." + std::to_string(n - 1);
      break;
    }
  }
  return s;
}

Suite suite_oracle_sets(std::size_t n_max, const OracleLimits& limits) {
  const std::size_t top = std::min(n_max, kFamilySetCheckMax);
  Suite s{"oracle-vs-families", SuiteStatus::pass, "n=3.." + std::to_string(top), ""};
  for (std::size_t n = 3; n <= top; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      try {
        const Family built = build_family(n, i);
        const Family expected = enumerate_dominating(n, i, limits);
        if (built.members != expected.members) {
          s.fail("n=" + std::to_string(n) + " i=" + std::to_string(i) +
                 " constructed family differs from exhaustive enumeration");
        }
      } catch (const ConstructionError& e) {
        s.fail(e.what());
      } catch (const OracleLimitError& e) {
        if (s.status == SuiteStatus::pass) s.status = SuiteStatus::skipped;
        s.detail = e.what();
        return s;
      }
    }
  }
  if (n_max > top && s.detail.empty()) {
    s.detail = "families above n=" + std::to_string(top) + " not materialized";
  }
  return s;
}

Suite suite_gf(std::size_t n_max, DominationTable& table) {
  const std::size_t top = std::max<std::size_t>(n_max, 4);
  Suite s{"gf-vs-recurrence", SuiteStatus::pass, "n=4.." + std::to_string(top), ""};
  const auto diffs = compare_with_table(expand(top), table);
  if (!diffs.empty()) {
    const auto& d = diffs.front();
    s.fail("n=" + std::to_string(d.n) + " i=" + std::to_string(d.i) + " series=" +
           to_decimal(d.series) + " recurrence=" + to_decimal(d.table));
  }
  return s;
}

Suite suite_identities(std::size_t n_max) {
  const std::size_t top = std::max<std::size_t>(n_max, 9);
  Suite s{"identities", SuiteStatus::pass, "n_max=" + std::to_string(top), ""};
  for (const auto& c : check_all(top)) {
    if (c.pass) continue;
    std::string what = std::string(roman(c.id)) + " over " + c.range;
    if (c.counterexample) {
      const auto& ce = *c.counterexample;
      what += ": n=" + std::to_string(ce.n) + " i=" + std::to_string(ce.i) + " expected " +
              ce.expected + " actual " + ce.actual;
    }
    s.fail(what);
  }
  return s;
}

int cmd_verify(const Options& o, const Environment& env, std::ostream& out) {
  const OracleLimits limits = oracle_limits(env);
  DominationTable table(std::max<std::size_t>(o.n, 4));
  std::vector<Suite> suites;
  suites.push_back(suite_oracle_counts(o.n, table, limits));
  suites.push_back(suite_oracle_sets(o.n, limits));
  suites.push_back(suite_gf(o.n, table));
  suites.push_back(suite_identities(o.n));

  bool failed = false;
  bool skipped = false;
  for (const Suite& s : suites) {
    std::string name = s.name;
    name.resize(22, ' ');
    const char* status = s.status == SuiteStatus::pass   ? "PASS"
                         : s.status == SuiteStatus::fail ? "FAIL"
                                                         : "SKIP";
    out << name << status << "  " << s.range;
    if (!s.detail.empty()) out << "  " << (s.status == SuiteStatus::pass ? "note: " : "") << s.detail;
    out << '\n';
    failed |= s.status == SuiteStatus::fail;
    skipped |= s.status == SuiteStatus::skipped;
  }
  if (skipped && !o.strict) out << "advisory: some suites were skipped (oracle limits)\n";
  return failed || (skipped && o.strict) ? kVerificationFailure : kSuccess;
}

}  // namespace

Environment Environment::from_process() {
  Environment env;
  if (const char* v = std::getenv("DOMPOLY_CACHE"); v && *v) env.cache_path = v;
  if (const char* v = std::getenv("DOMPOLY_ORACLE_BUDGET"); v && *v) env.oracle_budget = v;
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  CLI::App app{"Domination polynomials of cycles", "dompoly"};
  app.require_subcommand(1);
  Options o;
  const auto formats = CLI::IsMember({"csv", "json", "latex", "plain"});

  auto* table = app.add_subcommand("table", "d(C_n, j) for n, j = 1..N");
  table->add_option("n_max", o.n, "Largest cycle order")->required()->check(CLI::PositiveNumber);
  table->add_option("--format", o.format, "Output format")->check(formats);
  table->add_option("--cache", o.cache, "Table cache file to read, extend and write");
  table->add_flag("--json", o.json, "Same as --format json");

  auto* poly = app.add_subcommand("poly", "The domination polynomial D(C_n, x)");
  poly->add_option("n", o.n, "Cycle order")->required()->check(CLI::PositiveNumber);
  poly->add_option("--format", o.format, "Output format")->check(formats);
  poly->add_flag("--json", o.json, "Same as --format json");

  auto* family = app.add_subcommand("family", "All dominating sets of C_n with i vertices");
  family->add_option("n", o.n, "Cycle order")->required()->check(CLI::Range(3, 63));
  family->add_option("i", o.i, "Cardinality")->required()->check(CLI::NonNegativeNumber);
  family->add_option("--format", o.format, "Output format")->check(formats);
  family->add_flag("--force", o.force, "Ignore the family size guard");
  family->add_flag("--json", o.json, "Same as --format json");

  auto* verify = app.add_subcommand("verify", "Cross-check every route against the oracle");
  verify->add_option("n_max", o.n, "Largest cycle order")->required()->check(CLI::Range(3, 100000));
  verify->add_flag("--strict", o.strict, "Treat skipped suites as failures");

  auto* gf = app.add_subcommand("gf", "Coefficients of the bivariate generating function");
  gf->add_option("n_max", o.n, "Largest power of u")->required()->check(CLI::Range(4, 100000));
  gf->add_option("--format", o.format, "Output format")->check(formats);
  gf->add_flag("--json", o.json, "Same as --format json");

  o.n = kIdentityDefaultMax;
  auto* ident = app.add_subcommand("identities", "Check the closed-form coefficient identities");
  ident->add_option("n_max", o.n, "Largest cycle order (default 200)")->check(CLI::Range(9, 100000));
  ident->add_option("--format", o.format, "Output format")->check(formats);
  ident->add_flag("--json", o.json, "Same as --format json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kArgumentError;
  }

  try {
    if (table->parsed()) return cmd_table(o, env, out);
    if (poly->parsed()) return cmd_poly(o, out);
    if (family->parsed()) return cmd_family(o, out);
    if (verify->parsed()) return cmd_verify(o, env, out);
    if (gf->parsed()) return cmd_gf(o, out);
    if (ident->parsed()) return cmd_identities(o, out);
  } catch (const CommandError& e) {
    err << "dompoly: " << e.what() << '\n';
    return e.code;
  } catch (const SizeGuardError& e) {
    err << "dompoly: " << e.what() << '\n';
    return kSizeGuardRefusal;
  } catch (const ConstructionError& e) {
    err << "dompoly: construction check failed\n" << e.report.to_string() << '\n';
    return kConstructionFailure;
  } catch (const std::invalid_argument& e) {
    err << "dompoly: " << e.what() << '\n';
    return kArgumentError;
  }
  return kArgumentError;
}

}  // namespace dompoly::cli
