#include "dompoly/families.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "dompoly/recurrence.hpp"

namespace dompoly {

namespace {

constexpr std::size_t kMaxProblems = 8;

Family make_family(std::size_t n, std::size_t i,
                   std::initializer_list<std::initializer_list<Vertex>> sets) {
  Family f{n, i, {}};
  for (auto s : sets) f.members.emplace_back(CycleOrder{n}, s);
  std::sort(f.members.begin(), f.members.end());
  return f;
}

/// {start, start+3, ...} restricted to labels <= last.
std::vector<Vertex> progression(Vertex start, std::size_t last) {
  std::vector<Vertex> out;
  for (std::size_t v = start; v <= last; v += 3) out.push_back(static_cast<Vertex>(v));
  return out;
}

void note(FamilyReport& report, std::string text) {
  if (report.problems.size() < kMaxProblems) report.problems.push_back(std::move(text));
}

struct Node {
  Family family;
  FamilyReport report;
};

class FamilyBuilder {
 public:
  explicit FamilyBuilder(std::size_t n) : table_(std::max<std::size_t>(n, 1)) {}

  const DominationTable& table() const { return table_; }

  const Node& get(std::size_t n, std::size_t i) {
    const auto key = std::make_pair(n, i);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Node node = construct(n, i);
    return memo_.emplace(key, std::move(node)).first->second;
  }

 private:
  struct Candidate {
    VertexSet set;
    int stream;
  };

  bool nonempty(std::size_t n, std::size_t i) const {
    return n >= 1 && i >= 1 && table_.at(n, i) != 0;
  }

  Node construct(std::size_t n, std::size_t i) {
    Node node;
    node.family = Family{n, i, {}};
    FamilyReport& report = node.report;
    report.n = n;
    report.i = i;
    report.expected_count = table_.at(n, i);

    if (i == 0 || i > n || i < gamma_cycle(CycleOrder{n})) return node;
    if (n <= 3) {
      node.family = base_family(n, i);
      report.constructed_count = node.family.size();
      return node;
    }

    const CycleOrder order{n};
    const auto v = [](std::size_t label) { return static_cast<Vertex>(label); };
    std::vector<Candidate> candidates;
    const auto emit = [&](VertexSet s, int stream) {
      candidates.push_back({s.lifted(order), stream});
    };
    // X of C_{n-3}: add n-2 if 1 in X, else n-1 if 2 in X, else n.
    const auto extend_short = [&](const Family& parent, int stream) {
      for (const VertexSet& x : parent.members) {
        const std::size_t add = x.contains(1) ? n - 2 : x.contains(2) ? n - 1 : n;
        emit(x.extended(order, v(add)), stream);
      }
    };

    const bool has1 = nonempty(n - 1, i - 1);
    const bool has2 = nonempty(n - 2, i - 1);
    const bool has3 = nonempty(n - 3, i - 1);

    if (!has1 && !has2 && has3) {
      for (Vertex start : {1u, 2u, 3u}) emit(VertexSet(order, progression(start, n)), 0);
    } else if (has1 && !has2 && !has3) {
      emit(VertexSet::full(order), 0);
    } else if (!has1 && has2 && has3) {
      auto s1 = progression(1, n - 4);
      s1.push_back(v(n - 1));
      auto s2 = progression(2, n - 3);
      s2.push_back(v(n));
      auto s3 = progression(3, n - 2);
      s3.push_back(v(n));
      for (auto* s : {&s1, &s2, &s3}) emit(VertexSet(order, *s), 0);
      extend_short(get(n - 3, i - 1).family, 1);
    } else if (has1 && has2 && !has3) {
      const VertexSet all = VertexSet::full(order);
      for (std::size_t skip = 1; skip <= n; ++skip) {
        std::vector<Vertex> labels;
        for (Vertex x : all.labels())
          if (x != skip) labels.push_back(x);
        emit(VertexSet(order, std::move(labels)), 0);
      }
    } else if (has1 && has2 && has3) {
      const Family& f1 = get(n - 1, i - 1).family;
      const Family& f2 = get(n - 2, i - 1).family;
      const Family& f3 = get(n - 3, i - 1).family;
      for (const VertexSet& x : f1.members) emit(x.extended(order, v(n)), 0);
      for (const VertexSet& x : f2.members) {
        const bool near_end = x.contains(v(n - 2)) || x.contains(v(n - 3));
        const std::size_t add = near_end && !f1.contains(x) ? n : n - 1;
        emit(x.extended(order, v(add)), 1);
      }
      extend_short(f3, 2);
    } else if (has1 || has2 || has3) {
      note(report, "parent emptiness pattern (" + std::to_string(has1) + "," +
                       std::to_string(has2) + "," + std::to_string(has3) +
                       ") has no construction");
    }

    for (const Candidate& c : candidates) {
      if (c.set.size() != i || !is_dominating(order, c.set)) {
        report.all_dominating = false;
        note(report, "candidate " + c.set.to_string() + " does not dominate C_" +
                         std::to_string(n) + " with " + std::to_string(i) + " vertices");
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) { return a.set < b.set; });
    for (std::size_t k = 1; k < candidates.size(); ++k) {
      if (candidates[k].set != candidates[k - 1].set) continue;
      report.all_distinct = false;
      if (candidates[k].stream != candidates[k - 1].stream) report.streams_disjoint = false;
      note(report, "candidate " + candidates[k].set.to_string() + " produced twice");
    }
    node.family.members.reserve(candidates.size());
    for (const Candidate& c : candidates) {
      if (node.family.members.empty() || node.family.members.back() != c.set) {
        node.family.members.push_back(c.set);
      }
    }
    report.constructed_count = node.family.size();
    if (report.constructed_count != report.expected_count) {
      note(report, "constructed " + to_decimal(report.constructed_count) +
                       " sets, recurrence gives " + to_decimal(report.expected_count));
    }
    return node;
  }

  DominationTable table_;
  std::map<std::pair<std::size_t, std::size_t>, Node> memo_;
};

}  // namespace

std::string FamilyReport::to_string() const {
  std::string out = "family n=" + std::to_string(n) + " i=" + std::to_string(i) + ": " +
                    (passed() ? "PASS" : "FAIL") + " constructed=" +
                    to_decimal(constructed_count) + " expected=" + to_decimal(expected_count) +
                    " dominating=" + (all_dominating ? "yes" : "no") +
                    " distinct=" + (all_distinct ? "yes" : "no") +
                    " rotation_closed=" + (rotation_closed ? "yes" : "no") +
                    " streams_disjoint=" + (streams_disjoint ? "yes" : "no");
  for (const auto& p : problems) out += "\n  " + p;
  return out;
}

SizeGuardError::SizeGuardError(std::size_t n, std::size_t i, const Count& size_,
                               const Count& guard)
    : std::runtime_error("family n=" + std::to_string(n) + " i=" + std::to_string(i) +
                         " has " + to_decimal(size_) + " sets, above the guard of " +
                         to_decimal(guard) + "; use --force to override"),
      size(size_) {}

ConstructionError::ConstructionError(FamilyReport r)
    : std::runtime_error(r.to_string()), report(std::move(r)) {}

Family base_family(std::size_t n, std::size_t i) {
  if (n < 1 || n > 3) {
    throw std::invalid_argument("base_family: n must be in 1..3, got " + std::to_string(n));
  }
  switch (n * 4 + i) {
    case 1 * 4 + 1: return make_family(1, 1, {{1}});
    case 2 * 4 + 1: return make_family(2, 1, {{1}, {2}});
    case 2 * 4 + 2: return make_family(2, 2, {{1, 2}});
    case 3 * 4 + 1: return make_family(3, 1, {{1}, {2}, {3}});
    case 3 * 4 + 2: return make_family(3, 2, {{1, 2}, {1, 3}, {2, 3}});
    case 3 * 4 + 3: return make_family(3, 3, {{1, 2, 3}});
    default: return Family{n, i, {}};
  }
}

bool is_rotation_closed(const Family& family) {
  return std::all_of(family.members.begin(), family.members.end(),
                     [&](const VertexSet& s) { return family.contains(rotate(s, 1)); });
}

Family build_family(std::size_t n, std::size_t i, const FamilyOptions& options) {
  if (n < 1) throw std::invalid_argument("build_family: n must be >= 1");
  FamilyBuilder builder(n);
  const Count& expected = builder.table().at(n, i);
  if (!options.force && expected > options.size_guard) {
    throw SizeGuardError(n, i, expected, options.size_guard);
  }
  const Node& node = builder.get(n, i);
  if (!node.report.passed()) throw ConstructionError(node.report);
  return node.family;
}

FamilyReport verify_family(std::size_t n, std::size_t i) {
  if (n < 3) throw std::invalid_argument("verify_family: n must be >= 3");
  FamilyBuilder builder(n);
  const Node& node = builder.get(n, i);
  FamilyReport report = node.report;
  report.rotation_closed = is_rotation_closed(node.family);
  if (!report.rotation_closed && report.problems.size() < kMaxProblems) {
    report.problems.push_back("family is not closed under rotation by 1");
  }
  return report;
}

}  // namespace dompoly
