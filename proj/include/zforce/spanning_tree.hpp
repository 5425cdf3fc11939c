#pragma once

#include <vector>

#include "zforce/graph.hpp"

namespace zforce {

struct SpanningTree {
  Graph tree;
  Vertex root = 0;
  /// Breadth-first layers; layers[0] = {root}.
  std::vector<VertexSet> layers;
  /// Edges removed because both ends share a layer.
  std::vector<Edge> deleted_in_layer;
  /// Back edges removed in favour of a preferred parent.
  std::vector<Edge> deleted_parent;
  /// parent[v] in the tree, -1 for the root.
  std::vector<Vertex> parent;
};

/// Layered spanning tree. Layers are breadth-first distance classes from
/// `root`. Edges inside a layer are removed; a vertex with several
/// neighbours in the previous layer keeps only the one that is largest by
/// (degree in g, vertex id). Layers are processed in increasing order.
/// Throws std::invalid_argument on disconnected input and std::out_of_range
/// on a bad root.
SpanningTree spanning_tree(const Graph& g, Vertex root);

/// Tree degree counts; by_degree[k] is the number of vertices of degree k.
struct DegreeCensus {
  std::vector<int> by_degree;

  int count(int k) const { return k < static_cast<int>(by_degree.size()) ? by_degree[k] : 0; }
  int n1() const { return count(1); }
  int n2() const { return count(2); }
  int n3() const { return count(3); }
};

DegreeCensus degree_census(const SpanningTree& t);

}  // namespace zforce
