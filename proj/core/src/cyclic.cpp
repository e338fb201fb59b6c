#include "minorforge/cyclic.hpp"

#include <algorithm>

namespace minorforge {

CyclicOrder::CyclicOrder(std::vector<Vertex> ring) : ring_(std::move(ring)) {
  VertexSet s = set_sorted(ring_);
  if (s.size() != ring_.size()) throw MalformedInput("cyclic order has repeated elements");
}

bool CyclicOrder::contains(Vertex v) const {
  return std::find(ring_.begin(), ring_.end(), v) != ring_.end();
}

std::size_t CyclicOrder::index_of(Vertex v) const {
  auto it = std::find(ring_.begin(), ring_.end(), v);
  if (it == ring_.end()) throw MalformedInput("vertex not in cyclic order");
  return static_cast<std::size_t>(it - ring_.begin());
}

Vertex CyclicOrder::successor(Vertex v) const {
  std::size_t i = index_of(v);
  return ring_[(i + 1) % ring_.size()];
}

bool CyclicOrder::operator==(const CyclicOrder& o) const {
  if (ring_.size() != o.ring_.size()) return false;
  if (ring_.empty()) return true;
  auto it = std::find(o.ring_.begin(), o.ring_.end(), ring_[0]);
  if (it == o.ring_.end()) return false;
  std::size_t off = static_cast<std::size_t>(it - o.ring_.begin());
  for (std::size_t i = 0; i < ring_.size(); ++i)
    if (ring_[i] != o.ring_[(off + i) % o.ring_.size()]) return false;
  return true;
}

bool CyclicOrder::clockwise(const std::vector<Vertex>& seq) const {
  if (seq.size() <= 1) throw MalformedInput("clockwise needs at least two vertices");
  VertexSet s = set_sorted(seq);
  if (s.size() != seq.size()) throw MalformedInput("clockwise sequence has repeats");
  for (Vertex v : seq)
    if (!contains(v)) throw MalformedInput("clockwise sequence leaves the cyclic order");
  if (seq.size() == 2) return true;  // every rotation agrees on two elements
  CyclicOrder r = restrict(s);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Vertex prev = seq[i == 0 ? seq.size() - 1 : i - 1];
    if (r.successor(prev) != seq[i]) return false;
  }
  return true;
}

VertexSet CyclicOrder::interval(Vertex u, Vertex v) const {
  std::size_t iu = index_of(u), iv = index_of(v);
  VertexSet out;
  for (std::size_t i = iu;; i = (i + 1) % ring_.size()) {
    out.push_back(ring_[i]);
    if (i == iv) break;
  }
  return set_sorted(std::move(out));
}

VertexSet CyclicOrder::open_interval(Vertex u, Vertex v) const {
  return set_minus(interval(u, v), set_sorted({u, v}));
}

CyclicOrder CyclicOrder::restrict(const VertexSet& x) const {
  std::vector<Vertex> out;
  for (Vertex v : ring_)
    if (set_contains(x, v)) out.push_back(v);
  return CyclicOrder(out);
}

CyclicOrder CyclicOrder::without(const VertexSet& x) const {
  std::vector<Vertex> keep;
  for (Vertex v : ring_)
    if (!set_contains(x, v)) keep.push_back(v);
  return CyclicOrder(keep);
}

CyclicOrder CyclicOrder::reversed() const {
  std::vector<Vertex> r(ring_.rbegin(), ring_.rend());
  return CyclicOrder(r);
}

}  // namespace minorforge
