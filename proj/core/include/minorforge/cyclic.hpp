#pragma once

#include "minorforge/graph.hpp"

namespace minorforge {

/// Cyclic order over a set of distinct vertex ids. Two orders are equal iff
/// one is a rotation of the other; reflections are distinct orders.
class CyclicOrder {
 public:
  CyclicOrder() = default;
  explicit CyclicOrder(std::vector<Vertex> ring);

  const std::vector<Vertex>& ring() const { return ring_; }
  std::size_t size() const { return ring_.size(); }
  bool empty() const { return ring_.empty(); }
  bool contains(Vertex v) const;
  std::size_t index_of(Vertex v) const;  // throws if absent
  Vertex successor(Vertex v) const;

  bool operator==(const CyclicOrder& o) const;  // rotation equality

  /// True iff seq (distinct members of the ring, length >= 2) appears in this
  /// cyclic order; length <= 1 is an error.
  bool clockwise(const std::vector<Vertex>& seq) const;

  /// Interval u..v inclusive, walking clockwise; interval(u,u) = {u}.
  VertexSet interval(Vertex u, Vertex v) const;
  /// interval minus both endpoints
  VertexSet open_interval(Vertex u, Vertex v) const;

  CyclicOrder restrict(const VertexSet& x) const;
  CyclicOrder without(const VertexSet& x) const;
  CyclicOrder reversed() const;

 private:
  std::vector<Vertex> ring_;
};

}  // namespace minorforge
