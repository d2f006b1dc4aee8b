#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dompoly/cli.hpp"

namespace dompoly::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using CellFn = std::function<const Count&(std::size_t n, std::size_t j)>;

std::string join_row(std::size_t n, std::size_t columns, const CellFn& cell, char sep) {
  std::string line;
  for (std::size_t j = 1; j <= columns; ++j) {
    if (j > 1) line += sep;
    line += to_decimal(cell(n, j));
  }
  return line;
}

/// Rows first..last with columns 1..columns in the requested format.
std::string render_grid(std::size_t first, std::size_t last, std::size_t columns,
                        const CellFn& cell, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::csv:
    case OutputFormat::plain: {
      const char sep = format == OutputFormat::csv ? ',' : ' ';
      for (std::size_t n = first; n <= last; ++n) out << join_row(n, columns, cell, sep) << '\n';
      break;
    }
    case OutputFormat::json: {
      ordered_json rows = ordered_json::array();
      for (std::size_t n = first; n <= last; ++n) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 1; j <= columns; ++j) row.push_back(to_decimal(cell(n, j)));
        rows.push_back(std::move(row));
      }
      ordered_json doc;
      doc["n_max"] = last;
      doc["rows"] = std::move(rows);
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::latex: {
      out << "\\begin{tabular}{r|" << std::string(columns, 'r') << "}\n$j$";
      for (std::size_t j = 1; j <= columns; ++j) out << "&$" << j << '$';
      out << "\\\\\n\\hline\n$n$" << std::string(columns, '&') << "\\\\\n";
      for (std::size_t n = first; n <= last; ++n) {
        out << '$' << n << '$';
        for (std::size_t j = 1; j <= columns; ++j) {
          out << '&';
          if (j <= n) out << to_decimal(cell(n, j));
        }
        out << "\\\\\n";
      }
      out << "\\end{tabular}\n";
      break;
    }
  }
  return out.str();
}

ordered_json family_sets(const Family& family) {
  ordered_json sets = ordered_json::array();
  for (const VertexSet& s : family.members) {
    sets.push_back(std::vector<Vertex>(s.labels().begin(), s.labels().end()));
  }
  return sets;
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  if (text == "latex") return OutputFormat::latex;
  if (text == "plain") return OutputFormat::plain;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

std::string render_table(const DominationTable& table, std::size_t n_max, OutputFormat format) {
  if (n_max > table.n_max()) throw std::out_of_range("render_table: table too short");
  return render_grid(1, n_max, n_max,
                     [&](std::size_t n, std::size_t j) -> const Count& { return table.at(n, j); },
                     format);
}

std::string render_polynomial(const DominationPolynomial& p, OutputFormat format) {
  switch (format) {
    case OutputFormat::plain:
      return p.to_string() + '\n';
    case OutputFormat::latex: {
      std::string out;
      for (std::size_t k = p.coeffs.size(); k-- > 0;) {
        const Count& c = p.coeffs[k];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (c != 1 || k == 0) out += to_decimal(c);
        if (k >= 1) out += 'x';
        if (k >= 2) out += "^{" + std::to_string(k) + '}';
      }
      return "$" + (out.empty() ? std::string("0") : out) + "$\n";
    }
    case OutputFormat::csv: {
      std::string out;
      for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
        if (k) out += ',';
        out += to_decimal(p.coeffs[k]);
      }
      return out + '\n';
    }
    case OutputFormat::json: {
      ordered_json doc;
      doc["n"] = p.n;
      ordered_json coeffs = ordered_json::array();
      for (const Count& c : p.coeffs) coeffs.push_back(to_decimal(c));
      doc["coefficients"] = std::move(coeffs);
      return doc.dump() + '\n';
    }
  }
  return {};
}

std::string render_family(const Family& family, OutputFormat format) {
  switch (format) {
    case OutputFormat::plain:
      return family_sets(family).dump() + '\n';
    case OutputFormat::json: {
      ordered_json doc;
      doc["n"] = family.n;
      doc["i"] = family.i;
      doc["sets"] = family_sets(family);
      return doc.dump() + '\n';
    }
    case OutputFormat::csv: {
      std::string out;
      for (const VertexSet& s : family.members) {
        for (std::size_t k = 0; k < s.size(); ++k) {
          if (k) out += ',';
          out += std::to_string(s.labels()[k]);
        }
        out += '\n';
      }
      return out;
    }
    case OutputFormat::latex: {
      std::string out = "$\\{";
      for (std::size_t m = 0; m < family.members.size(); ++m) {
        if (m) out += ",";
        out += "\\{";
        const auto labels = family.members[m].labels();
        for (std::size_t k = 0; k < labels.size(); ++k) {
          if (k) out += ',';
          out += std::to_string(labels[k]);
        }
        out += "\\}";
      }
      return out + "\\}$\n";
    }
  }
  return {};
}

std::string render_series(const BivariateSeries& series, OutputFormat format,
                          const std::vector<Discrepancy>& discrepancies) {
  const std::size_t order = series.order();
  const CellFn cell = [&](std::size_t n, std::size_t j) -> const Count& {
    return series.coefficient(n, j);
  };
  const std::string verdict = discrepancies.empty() ? "agree" : "disagree";
  if (format != OutputFormat::json) {
    std::string out = render_grid(4, order, order, cell, format);
    if (format == OutputFormat::plain) {
      out += "verdict: " + verdict + '\n';
      for (const auto& d : discrepancies) {
        out += "  n=" + std::to_string(d.n) + " i=" + std::to_string(d.i) +
               " series=" + to_decimal(d.series) + " recurrence=" + to_decimal(d.table) + '\n';
      }
    }
    return out;
  }
  ordered_json rows = ordered_json::array();
  for (std::size_t n = 4; n <= order; ++n) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 1; j <= order; ++j) row.push_back(to_decimal(cell(n, j)));
    rows.push_back(std::move(row));
  }
  ordered_json diffs = ordered_json::array();
  for (const auto& d : discrepancies) {
    diffs.push_back({{"n", d.n}, {"i", d.i}, {"series", to_decimal(d.series)},
                     {"recurrence", to_decimal(d.table)}});
  }
  ordered_json doc;
  doc["n_min"] = 4;
  doc["n_max"] = order;
  doc["rows"] = std::move(rows);
  doc["verdict"] = verdict;
  doc["discrepancies"] = std::move(diffs);
  return doc.dump() + '\n';
}

std::string render_identities(const std::vector<IdentityCheck>& checks, OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json doc = ordered_json::array();
    for (const auto& c : checks) {
      ordered_json item;
      item["id"] = std::string(roman(c.id));
      item["range"] = c.range;
      item["pass"] = c.pass;
      if (c.counterexample) {
        const auto& ce = *c.counterexample;
        item["counterexample"] = {{"n", ce.n}, {"i", ce.i}, {"expected", ce.expected},
                                  {"actual", ce.actual}};
      } else {
        item["counterexample"] = nullptr;
      }
      doc.push_back(std::move(item));
    }
    return doc.dump() + '\n';
  }
  std::ostringstream out;
  for (const auto& c : checks) {
    std::string id(roman(c.id));
    id.resize(5, ' ');
    out << id << (c.pass ? "PASS  " : "FAIL  ") << c.range;
    if (c.counterexample) {
      const auto& ce = *c.counterexample;
      out << "  counterexample n=" << ce.n << " i=" << ce.i << " expected " << ce.expected
          << " actual " << ce.actual;
    }
    out << '\n';
    if (!c.note.empty()) out << "     note: " << c.note << '\n';
  }
  return out.str();
}

}  // namespace dompoly::cli
