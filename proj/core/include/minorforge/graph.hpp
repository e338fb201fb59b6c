#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minorforge {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // kept sorted & unique by helpers below
using Edge = std::pair<Vertex, Vertex>;

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};
struct MalformedInput : std::runtime_error {
  explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};
struct HypothesisUnmet : std::runtime_error {
  explicit HypothesisUnmet(const std::string& what) : std::runtime_error(what) {}
};

// set helpers on sorted vectors
VertexSet set_sorted(VertexSet v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersect(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& a, Vertex v);
bool set_subset(const VertexSet& a, const VertexSet& b);  // a subseteq b

/// Multigraph with loops and parallel edges, dense 0-based vertex ids.
/// Connectivity, planarity and minor predicates work on the simple view;
/// multiplicities and loops are preserved in storage only.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n) {}
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const;  // simple view, loops ignored

  // simple-view neighbors: sorted, unique, no self
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  int simple_degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  /// Simple-view edge list (u < v, deduplicated, loops dropped).
  std::vector<Edge> simple_edges() const;

  /// Subgraph induced on X; original ids are kept (vertices outside X become
  /// isolated and are reported in the mask), unless relabel = true, in which
  /// case vertices are renumbered by ascending original id.
  Graph induced(const VertexSet& x) const;

  /// Delete a vertex set, keeping ids stable (vertices stay, edges vanish).
  Graph delete_vertices(const VertexSet& x) const;

  /// Graph with every edge of the simple view subdivided once.
  Graph subdivide_all() const;

  bool connected_within(const VertexSet& x) const;  // G[x] connected (x nonempty)
  std::vector<VertexSet> components() const;
  std::vector<VertexSet> components_within(const VertexSet& x) const;

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw MalformedInput("vertex id out of range: " + std::to_string(v));
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// A separation (A,B): A u B = V, no edge between A-B and B-A.
struct Separation {
  VertexSet a;
  VertexSet b;
  int order(const Graph&) const { return static_cast<int>(set_intersect(a, b).size()); }
  bool valid(const Graph& g) const;
};

/// Branch sets realizing a K6 minor.
struct MinorModel {
  std::vector<VertexSet> branch_sets;  // exactly 6
};

enum class Disjointness { FullyDisjoint, InternallyDisjoint, SharedEndpointsAllowed };

/// Raw container for path collections (longitudes, legs, bumps, ...).
/// Each path lists its vertices in order; the disjointness contract the
/// producer promises is recorded explicitly.
struct PathSystem {
  std::vector<std::vector<Vertex>> paths;
  Disjointness mode = Disjointness::FullyDisjoint;

  bool valid(const Graph& g) const;  // each entry a path of g + mode honored
};

bool is_path_of(const Graph& g, const std::vector<Vertex>& p);  // distinct, consecutive adjacent

std::string to_dot(const Graph& g);

}  // namespace minorforge
