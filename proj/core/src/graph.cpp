#include "minorforge/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace minorforge {

VertexSet set_sorted(VertexSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& a, Vertex v) {
  return std::binary_search(a.begin(), a.end(), v);
}

bool set_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  edges_.emplace_back(u, v);
  if (u != v && !adjacent(u, v)) {
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::simple_edges() const {
  std::set<Edge> seen;
  for (auto [u, v] : edges_) {
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    seen.insert({u, v});
  }
  return {seen.begin(), seen.end()};
}

Graph Graph::induced(const VertexSet& x) const {
  Graph h(n_);
  for (auto [u, v] : edges_)
    if (set_contains(x, u) && set_contains(x, v)) h.add_edge(u, v);
  return h;
}

Graph Graph::delete_vertices(const VertexSet& x) const {
  Graph h(n_);
  for (auto [u, v] : edges_)
    if (!set_contains(x, u) && !set_contains(x, v)) h.add_edge(u, v);
  return h;
}

Graph Graph::subdivide_all() const {
  auto se = simple_edges();
  Graph h(n_ + static_cast<int>(se.size()));
  int next = n_;
  for (auto [u, v] : se) {
    h.add_edge(u, next);
    h.add_edge(next, v);
    ++next;
  }
  return h;
}

bool Graph::connected_within(const VertexSet& x) const {
  if (x.empty()) return false;
  std::vector<char> in(n_, 0), seen(n_, 0);
  for (Vertex v : x) {
    check_vertex(v);
    in[v] = 1;
  }
  std::vector<Vertex> stack{x.front()};
  seen[x.front()] = 1;
  std::size_t cnt = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++cnt;
    for (Vertex w : adj_[v])
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return cnt == x.size();
}

std::vector<VertexSet> Graph::components() const {
  VertexSet all(n_);
  for (int i = 0; i < n_; ++i) all[i] = i;
  return components_within(all);
}

std::vector<VertexSet> Graph::components_within(const VertexSet& x) const {
  std::vector<char> in(n_, 0), seen(n_, 0);
  for (Vertex v : x) {
    check_vertex(v);
    in[v] = 1;
  }
  std::vector<VertexSet> out;
  for (Vertex s : x) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : adj_[v])
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    out.push_back(set_sorted(std::move(comp)));
  }
  return out;
}

bool Separation::valid(const Graph& g) const {
  VertexSet all = set_union(a, b);
  if (static_cast<int>(all.size()) != g.n()) return false;
  if (all.empty() && g.n() == 0) return true;
  if (all.back() >= g.n() || all.front() < 0) return false;
  VertexSet aOnly = set_minus(a, b), bOnly = set_minus(b, a);
  for (auto [u, v] : g.edges()) {
    if (u == v) continue;
    bool cross = (set_contains(aOnly, u) && set_contains(bOnly, v)) ||
                 (set_contains(aOnly, v) && set_contains(bOnly, u));
    if (cross) return false;
  }
  return true;
}

bool is_path_of(const Graph& g, const std::vector<Vertex>& p) {
  if (p.empty()) return false;
  VertexSet s = set_sorted(p);
  if (s.size() != p.size()) return false;  // vertices distinct
  for (Vertex v : p)
    if (v < 0 || v >= g.n()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.adjacent(p[i], p[i + 1])) return false;
  return true;
}

bool PathSystem::valid(const Graph& g) const {
  for (const auto& p : paths)
    if (!is_path_of(g, p)) return false;
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      VertexSet shared = set_intersect(set_sorted(paths[i]), set_sorted(paths[j]));
      for (Vertex v : shared) {
        bool end_i = v == paths[i].front() || v == paths[i].back();
        bool end_j = v == paths[j].front() || v == paths[j].back();
        switch (mode) {
          case Disjointness::FullyDisjoint:
            return false;
          case Disjointness::InternallyDisjoint:
            if (!end_i || !end_j) return false;
            break;
          case Disjointness::SharedEndpointsAllowed:
            if (!end_i || !end_j) return false;
            break;
        }
      }
    }
  return true;
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace minorforge
