#pragma once

/**
 * @file core.hpp
 * @brief Cycle-graph primitives: vertex sets, the domination predicate and
 *        the domination number of C_n.
 *
 * Vertices of C_n carry the labels 1..n; vertex v is adjacent to v-1 and
 * v+1 taken cyclically. All public I/O uses these 1-based labels.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dompoly {

using Vertex = std::uint32_t;

/// Number of vertices of a cycle. Graph operations additionally need n >= 3.
struct CycleOrder {
  std::size_t value = 0;

  constexpr explicit CycleOrder(std::size_t n) : value(n) {}
  constexpr operator std::size_t() const noexcept { return value; }
  friend constexpr auto operator<=>(CycleOrder, CycleOrder) = default;
};

/**
 * A subset of the vertices of C_n in canonical (strictly increasing) form.
 *
 * Ordering and equality compare the label sequences only. The ambient order
 * is carried along for validation, but a set {1,3} of C_4 and {1,3} of C_5
 * compare equal: families of different cycles are intersected by label set.
 */
class VertexSet {
 public:
  VertexSet() = default;

  /// Sorts @p labels; throws std::invalid_argument on duplicates or labels
  /// outside 1..n.
  VertexSet(CycleOrder n, std::vector<Vertex> labels);
  VertexSet(CycleOrder n, std::initializer_list<Vertex> labels)
      : VertexSet(n, std::vector<Vertex>(labels)) {}

  /// All of [n].
  static VertexSet full(CycleOrder n);

  CycleOrder order() const noexcept { return order_; }
  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  std::span<const Vertex> labels() const noexcept { return labels_; }
  bool contains(Vertex v) const noexcept;

  /// The same labels plus @p v, viewed as a subset of C_{new_order}.
  /// @p v must not already be present and must be <= new_order.
  VertexSet extended(CycleOrder new_order, Vertex v) const;

  /// The same labels viewed as a subset of a larger cycle.
  VertexSet lifted(CycleOrder new_order) const;

  std::string to_string() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.labels_ == b.labels_;
  }
  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b) noexcept {
    return a.labels_ <=> b.labels_;
  }

 private:
  struct Unchecked {};
  VertexSet(Unchecked, CycleOrder n, std::vector<Vertex> labels)
      : order_(n), labels_(std::move(labels)) {}

  CycleOrder order_{0};
  std::vector<Vertex> labels_;
};

/// A collection of dominating sets of C_n with the same cardinality, kept
/// lexicographically sorted.
struct Family {
  std::size_t n = 0;
  std::size_t i = 0;
  std::vector<VertexSet> members;

  std::size_t size() const noexcept { return members.size(); }
  bool empty() const noexcept { return members.empty(); }
  /// Binary search; requires @c members sorted.
  bool contains(const VertexSet& s) const;

  friend bool operator==(const Family&, const Family&) = default;
};

/// True iff every vertex of C_n outside @p s has a cyclic neighbour in @p s.
/// Throws std::invalid_argument for n < 3 or when @p s belongs to another
/// cycle.
bool is_dominating(CycleOrder n, const VertexSet& s);

/// ceil(n/3).
std::size_t gamma_cycle(CycleOrder n);

/// Maps every label v to ((v-1+k) mod n)+1. Negative @p k rotates backwards.
VertexSet rotate(const VertexSet& s, long long k);

}  // namespace dompoly
