#pragma once

#include "minorforge/graph.hpp"

namespace minorforge {

struct VertexCut {
  VertexSet cut;        // deleting these vertices separates X from Y
  PathSystem paths;     // |paths| = |cut| fully disjoint X-Y paths, one per cut vertex
  VertexSet x_side;     // A of the induced separation (A,B); inclusion-minimal
  VertexSet y_side;     // B
};

/// Minimum vertex cut separating X from Y (deletion semantics: the cut may
/// contain vertices of X and Y; shared vertices of X and Y are forced cut
/// members). Among minimum cuts the one whose X-side is inclusion-minimal is
/// returned, together with a maximum family of fully vertex-disjoint X-Y
/// paths, each meeting the cut in exactly one vertex.
VertexCut min_vertex_cut(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Max internally disjoint s-t paths (s,t uncapacitated); s != t.
int local_connectivity(const Graph& g, Vertex s, Vertex t);

/// Standard k-connectivity on the simple view: |V| > k and no cut of size < k.
bool is_k_connected(const Graph& g, int k);

}  // namespace minorforge
