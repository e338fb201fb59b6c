#include "minorforge/connectivity.hpp"

#include <algorithm>
#include <queue>

namespace minorforge {

namespace {

// Unit-capacity flow network for vertex-disjoint path problems.
// Node 2v = v_in, 2v+1 = v_out; source/sink appended.
struct FlowNet {
  struct Arc {
    int to, rev;
    int cap, orig;
  };
  std::vector<std::vector<Arc>> adj;
  explicit FlowNet(int nodes) : adj(nodes) {}
  void add(int a, int b, int cap) {
    adj[a].push_back({b, static_cast<int>(adj[b].size()), cap, cap});
    adj[b].push_back({a, static_cast<int>(adj[a].size()) - 1, 0, 0});
  }
  bool bfs_path(int s, int t, std::vector<std::pair<int, int>>& parent) {
    parent.assign(adj.size(), {-1, -1});
    std::queue<int> q;
    q.push(s);
    parent[s] = {s, -1};
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (v == t) return true;
      for (int i = 0; i < static_cast<int>(adj[v].size()); ++i) {
        const Arc& a = adj[v][i];
        if (a.cap > 0 && parent[a.to].first == -1) {
          parent[a.to] = {v, i};
          q.push(a.to);
        }
      }
    }
    return false;
  }
  int max_flow(int s, int t, int limit) {
    int flow = 0;
    std::vector<std::pair<int, int>> parent;
    while (flow < limit && bfs_path(s, t, parent)) {
      for (int v = t; v != s;) {
        auto [p, idx] = parent[v];
        adj[p][idx].cap -= 1;
        adj[adj[p][idx].to][adj[p][idx].rev].cap += 1;
        v = p;
      }
      ++flow;
    }
    return flow;
  }
  int flow_on(int from, const Arc& a) const {
    (void)from;
    return a.orig - a.cap;
  }
};

}  // namespace

VertexCut min_vertex_cut(const Graph& g, const VertexSet& x_in, const VertexSet& y_in) {
  VertexSet x = set_sorted(x_in), y = set_sorted(y_in);
  for (Vertex v : x) g.check_vertex(v);
  for (Vertex v : y) g.check_vertex(v);

  const int n = g.n();
  const int S = 2 * n, T = 2 * n + 1;
  const int inf = n + 1;
  FlowNet net(2 * n + 2);
  for (int v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, 1);
  for (auto [u, v] : g.simple_edges()) {
    net.add(2 * u + 1, 2 * v, inf);
    net.add(2 * v + 1, 2 * u, inf);
  }
  for (Vertex v : x) net.add(S, 2 * v, inf);
  for (Vertex v : y) net.add(2 * v + 1, T, inf);
  net.max_flow(S, T, inf);

  // Residual reachability from S. A vertex whose split arc is saturated on the
  // frontier is a cut vertex; the reachable side closed with the cut is the
  // inclusion-minimal X-side.
  std::vector<char> reach(net.adj.size(), 0);
  {
    std::vector<int> stack{S};
    reach[S] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& a : net.adj[v])
        if (a.cap > 0 && !reach[a.to]) {
          reach[a.to] = 1;
          stack.push_back(a.to);
        }
    }
  }
  VertexCut out;
  for (int v = 0; v < n; ++v)
    if (reach[2 * v] && !reach[2 * v + 1]) out.cut.push_back(v);
  VertexSet a_side;
  for (int v = 0; v < n; ++v)
    if (reach[2 * v]) a_side.push_back(v);
  out.x_side = set_union(a_side, out.cut);
  VertexSet strictlyA = set_minus(out.x_side, out.cut);
  for (int v = 0; v < n; ++v)
    if (!set_contains(strictlyA, v)) out.y_side.push_back(v);

  // Flow decomposition: each unit leaving S traces one X-Y path through
  // distinct vertex splits, so the paths are fully vertex-disjoint.
  out.paths.mode = Disjointness::FullyDisjoint;
  for (const auto& src : net.adj[S]) {
    if (net.flow_on(S, src) <= 0) continue;
    int v = src.to / 2;  // src.to = 2*x
    std::vector<Vertex> path;
    while (true) {
      path.push_back(v);
      int nxt = -2;
      for (const auto& a : net.adj[2 * v + 1]) {
        if (net.flow_on(2 * v + 1, a) <= 0) continue;
        nxt = (a.to == T) ? -1 : a.to / 2;
        break;
      }
      if (nxt == -1) break;           // reached Y
      if (nxt == -2) { path.clear(); break; }  // defensive
      v = nxt;
    }
    if (!path.empty()) out.paths.paths.push_back(std::move(path));
  }
  return out;
}

int local_connectivity(const Graph& g, Vertex s, Vertex t) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) throw MalformedInput("local connectivity needs distinct vertices");
  const int n = g.n();
  const int inf = n + 1;
  FlowNet net(2 * n);
  for (int v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
  for (auto [u, v] : g.simple_edges()) {
    net.add(2 * u + 1, 2 * v, inf);
    net.add(2 * v + 1, 2 * u, inf);
  }
  return net.max_flow(2 * s + 1, 2 * t, inf);
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 0) throw MalformedInput("k must be nonnegative");
  if (g.n() <= k) return false;
  if (k == 0) return true;
  std::size_t comps = g.components().size();
  if (comps > 1) return false;
  if (k == 1) return true;
  for (int s = 0; s < g.n(); ++s)
    for (int t = s + 1; t < g.n(); ++t) {
      if (g.adjacent(s, t)) continue;
      if (local_connectivity(g, s, t) < k) return false;
    }
  return true;
}

}  // namespace minorforge
