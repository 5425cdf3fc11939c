#include "zforce/spanning_tree.hpp"

#include <algorithm>

namespace zforce {

SpanningTree spanning_tree(const Graph& g, Vertex root) {
  if (root < 0 || root >= g.order())
    throw std::out_of_range("root " + std::to_string(root) + " outside the graph");
  if (!g.is_connected()) throw std::invalid_argument("spanning tree needs a connected graph");

  SpanningTree t;
  t.root = root;
  t.tree = Graph(g.order());
  t.parent.assign(g.order(), -1);

  VertexSet reached = VertexSet::singleton(root);
  t.layers.push_back(reached);
  for (;;) {
    VertexSet next;
    for (Vertex v : t.layers.back()) next |= g.neighbors(v);
    next = next.minus(reached);
    if (next.empty()) break;
    reached |= next;
    t.layers.push_back(next);
  }

  auto prefer = [&g](Vertex a, Vertex b) {  // true if a beats b
    return std::pair(g.degree(a), a) > std::pair(g.degree(b), b);
  };

  for (std::size_t i = 0; i < t.layers.size(); ++i) {
    const VertexSet layer = t.layers[i];
    for (Vertex u : layer)
      for (Vertex w : g.neighbors(u) & layer)
        if (u < w) t.deleted_in_layer.push_back({u, w});
    if (i + 1 == t.layers.size()) break;
    for (Vertex x : t.layers[i + 1]) {
      const VertexSet candidates = g.neighbors(x) & layer;
      Vertex keep = candidates.front();
      for (Vertex u : candidates)
        if (prefer(u, keep)) keep = u;
      for (Vertex u : candidates)
        if (u != keep) t.deleted_parent.push_back({std::min(u, x), std::max(u, x)});
      t.parent[x] = keep;
      t.tree.add_edge(keep, x);
    }
  }
  return t;
}

DegreeCensus degree_census(const SpanningTree& t) {
  DegreeCensus c;
  c.by_degree.assign(t.tree.max_degree() + 1, 0);
  for (Vertex v = 0; v < t.tree.order(); ++v) ++c.by_degree[t.tree.degree(v)];
  return c;
}

}  // namespace zforce
