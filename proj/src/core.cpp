#include "dompoly/core.hpp"

#include <algorithm>
#include <numeric>

namespace dompoly {

VertexSet::VertexSet(CycleOrder n, std::vector<Vertex> labels)
    : order_(n), labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw std::invalid_argument("VertexSet: duplicate label");
  }
  if (!labels_.empty() && (labels_.front() < 1 || labels_.back() > n.value)) {
    throw std::invalid_argument("VertexSet: label outside 1.." +
                                std::to_string(n.value));
  }
}

VertexSet VertexSet::full(CycleOrder n) {
  std::vector<Vertex> labels(n.value);
  std::iota(labels.begin(), labels.end(), Vertex{1});
  return VertexSet(Unchecked{}, n, std::move(labels));
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(labels_.begin(), labels_.end(), v);
}

VertexSet VertexSet::extended(CycleOrder new_order, Vertex v) const {
  if (new_order < order_ || v < 1 || v > new_order.value || contains(v)) {
    throw std::invalid_argument("VertexSet::extended: cannot add " +
                                std::to_string(v) + " to " + to_string());
  }
  std::vector<Vertex> labels;
  labels.reserve(labels_.size() + 1);
  auto pos = std::lower_bound(labels_.begin(), labels_.end(), v);
  labels.insert(labels.end(), labels_.begin(), pos);
  labels.push_back(v);
  labels.insert(labels.end(), pos, labels_.end());
  return VertexSet(Unchecked{}, new_order, std::move(labels));
}

VertexSet VertexSet::lifted(CycleOrder new_order) const {
  if (new_order < order_) {
    throw std::invalid_argument("VertexSet::lifted: order cannot shrink");
  }
  return VertexSet(Unchecked{}, new_order, labels_);
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(labels_[k]);
  }
  out += '}';
  return out;
}

bool Family::contains(const VertexSet& s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

bool is_dominating(CycleOrder n, const VertexSet& s) {
  if (n.value < 3) {
    throw std::invalid_argument("is_dominating: C_n needs n >= 3, got " +
                                std::to_string(n.value));
  }
  if (s.order() != n) {
    throw std::invalid_argument("is_dominating: set belongs to C_" +
                                std::to_string(s.order().value));
  }
  std::vector<bool> chosen(n.value + 1, false);
  for (Vertex v : s.labels()) chosen[v] = true;
  for (std::size_t v = 1; v <= n.value; ++v) {
    if (chosen[v]) continue;
    const std::size_t prev = v == 1 ? n.value : v - 1;
    const std::size_t next = v == n.value ? 1 : v + 1;
    if (!chosen[prev] && !chosen[next]) return false;
  }
  return true;
}

std::size_t gamma_cycle(CycleOrder n) {
  if (n.value < 1) throw std::invalid_argument("gamma_cycle: n must be >= 1");
  return (n.value + 2) / 3;
}

VertexSet rotate(const VertexSet& s, long long k) {
  const auto n = static_cast<long long>(s.order().value);
  if (n == 0) return s;
  const long long shift = ((k % n) + n) % n;
  std::vector<Vertex> labels;
  labels.reserve(s.size());
  for (Vertex v : s.labels()) {
    labels.push_back(static_cast<Vertex>((static_cast<long long>(v) - 1 + shift) % n + 1));
  }
  return VertexSet(s.order(), std::move(labels));
}

}  // namespace dompoly
