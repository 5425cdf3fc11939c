#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zforce/graph.hpp"

namespace zforce {

/// A graph with attachment tags. `yellow` and `white` are independent so the
/// degenerate M0 block can carry both tags on one vertex.
struct ColoredGraph {
  Graph graph;
  VertexSet yellow;
  VertexSet white;

  VertexSet pendants() const;
  /// Vertices that receive edges from the left: yellow or degree one.
  VertexSet attachment_in() const { return yellow | pendants(); }
};

// Ladder labelling shared by the blocks: rung i joins top 2i and bottom
// 2i+1, rails run 2i-2(i+1) and (2i+1)-(2i+3).

/// T_m: m+1 rungs plus an apex (vertex 2m+2) on the last rung.
/// Yellow = first rung and the apex. T_0 is K3, all yellow.
ColoredGraph ladder_T(int m);

/// M_n: n+1 rungs plus a tail 2n+1 - (2n+2) - (2n+3) hanging from the last
/// bottom vertex. Yellow = first rung; white = last top vertex and the tail.
/// M_0 is the path 0-1-2-3 with yellow {0,1} and white {0,2,3}.
ColoredGraph ladder_M(int n);

/// One edge per attachment pair: (vertex of g1, vertex of g2) in each
/// graph's own ids.
using Matching = std::vector<std::pair<Vertex, Vertex>>;

/// g1 ⊎ g2 under the bijection f from the white vertices of g1 onto the
/// yellow-or-pendant vertices of g2. g2 is relabelled by +|g1|. The result
/// keeps g1's attachment-in set as its yellow tags (so a later apex reaches
/// them) and g2's white tags. Throws std::invalid_argument when the sets
/// differ in size or f is not a bijection between them.
ColoredGraph compound(const ColoredGraph& g1, const ColoredGraph& g2, const Matching& f);

/// K1 ▲ g: a new last vertex joined to every yellow or pendant vertex.
Graph apex_K1(const ColoredGraph& g);

enum class BlockKind { M, T };

struct Block {
  BlockKind kind;
  int index;
  bool operator==(const Block&) const = default;
};

/// K1 ▲ G1 ⊎ ... ⊎ Gt ⊎ T_m. `matchings[j]` is the permutation used at the
/// j-th junction: the i-th white vertex of the left side (ascending id) goes
/// to the matchings[j][i]-th attachment-in vertex of the next block.
struct FamilySpec {
  std::vector<Block> blocks;
  std::vector<std::vector<int>> matchings;
  bool apex = true;

  /// "apex(M1+T0)", with "[...]" junction permutations when non-trivial.
  std::string to_string() const;
  bool operator==(const FamilySpec&) const = default;
};

/// Builds the colored compound chain and, if spec.apex, the apex graph.
Graph assemble(const FamilySpec& spec);

struct FamilyMember {
  Graph graph;
  FamilySpec spec;
};

/// All cubic connected graphs of the given order of the forms K1▲T_m and
/// K1▲M_{n1}⊎...⊎M_{nt}⊎T_m over every junction bijection, one
/// representative per isomorphism class, in discovery order.
std::vector<FamilyMember> enumerate_family(int order);

/// Members built from one block sequence over all junction bijections,
/// deduplicated up to isomorphism.
std::vector<FamilyMember> family_members(const std::vector<Block>& blocks);

/// (C_n)_sigma: outer cycle u_k = k-1, inner cycle v_k = n+k-1, spokes
/// u_k - v_sigma(k). `transposition` holds 1-based (i, j); nullopt is the
/// identity. Requires n >= 4.
Graph permutation_prism(int n, std::optional<std::pair<int, int>> transposition);

/// Incidence graph of the Fano plane: points 0..6, block j (vertex 7+j) is
/// {j, j+1, j+3} mod 7.
Graph heawood();

/// The order-16 cubic graph with Z = 8: root 0, branches 1..3, and under
/// each branch two middle vertices joined to a K4-minus-an-edge gadget.
Graph counterexample16();

/// Cyclic chain of b >= 2 six-vertex beads. Bead i uses 6i..6i+5: entry e,
/// twins a/a', twins c/c', exit x, with e~a,a'; {a,a'}~{c,c'}; c,c'~x; and
/// x joined to the next bead's entry.
Graph necklace(int beads);

/// Sanity graphs used around the library and the CLI.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen();

}  // namespace zforce
