#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zforce/vertex_set.hpp"

namespace zforce {

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on the dense vertex ids 0..n-1 (n <= 64).
///
/// Adjacency is kept as one bitset row per vertex, so the edge set, the
/// neighbourhoods and the degrees are always consistent with each other.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  /// Adds {u, v}. Throws std::invalid_argument on a loop or an edge that is
  /// already present, std::out_of_range on a bad endpoint.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;
  VertexSet vertices() const { return VertexSet::first(order()); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  int min_degree() const;
  int max_degree() const;
  bool is_regular(int k) const;
  bool is_cubic() const { return order() > 0 && is_regular(3); }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_connected() const;
  /// Vertex sets of the connected components, ordered by smallest member.
  std::vector<VertexSet> components() const;
  /// Subgraph induced on `keep`, relabelled in increasing id order.
  Graph induced(VertexSet keep) const;
  /// Vertex v mapped to perm[v].
  Graph relabelled(std::span<const Vertex> perm) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;
  std::vector<VertexSet> adj_;
};

/// Thrown by parse_graph6; carries the byte offset of the offending input.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr int kMaxGraph6Order = 62;

/// Parses one graph6 record (single-byte size form, optional ">>graph6<<"
/// header, trailing newline tolerated).
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// Minimum number of edges whose removal disconnects g; 0 when g is
/// disconnected or has a single vertex.
int edge_connectivity(const Graph& g);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

/// mapping[v] is the image in h of vertex v of g.
struct IsoWitness {
  std::optional<std::vector<Vertex>> mapping;
  explicit operator bool() const { return mapping.has_value(); }
};

/// Exact isomorphism test by colour refinement and backtracking.
IsoWitness are_isomorphic(const Graph& g, const Graph& h);

/// Checks that `mapping` is an isomorphism g -> h.
bool is_isomorphism(const Graph& g, const Graph& h, std::span<const Vertex> mapping);

/// Isomorphism-invariant fingerprint; equal graphs up to relabelling hash
/// equal, unequal hashes prove non-isomorphism.
std::size_t invariant_hash(const Graph& g);

}  // namespace zforce
