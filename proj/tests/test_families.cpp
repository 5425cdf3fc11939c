#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "zforce/families.hpp"
#include "zforce/forcing.hpp"

using namespace zforce;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

Graph from_one_based(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
  return g;
}

// The ten-vertex member of K1▲M1⊎T0 drawn as a worked example.
Graph figure_four() {
  return from_one_based(10, {{1, 2}, {1, 3}, {1, 7}, {2, 4}, {2, 3}, {3, 5}, {4, 5}, {4, 8},
                             {5, 6}, {6, 9}, {6, 7}, {7, 10}, {9, 10}, {8, 10}, {8, 9}});
}

Graph triangular_prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("T blocks") {
  const ColoredGraph t0 = ladder_T(0);
  CHECK(oracle::isomorphic(t0.graph, complete_graph(3)));
  CHECK(t0.yellow == t0.graph.vertices());

  const ColoredGraph t1 = ladder_T(1);
  CHECK(t1.graph.order() == 5);
  CHECK(t1.yellow.size() == 3);
  CHECK(oracle::isomorphic(apex_K1(t1), triangular_prism()));

  const ColoredGraph t2 = ladder_T(2);
  CHECK(t2.graph.order() == 7);
  // Three rungs plus an apex on the last rung: nine edges, degree sum 18.
  CHECK(degree_sequence(t2.graph) == std::vector<int>{2, 2, 2, 3, 3, 3, 3});
  CHECK(apex_K1(t2).is_cubic());

  for (int m = 0; m <= 6; ++m) {
    const ColoredGraph t = ladder_T(m);
    CHECK(t.graph.order() == 2 * m + 3);
    CHECK(t.attachment_in().size() == 3);
    CHECK(t.graph.is_connected());
  }
}

TEST_CASE("M blocks") {
  const ColoredGraph m0 = ladder_M(0);
  CHECK(m0.graph == path_graph(4));
  CHECK(m0.attachment_in().size() == 3);
  CHECK(m0.white.size() == 3);
  CHECK(m0.yellow.intersects(m0.white));

  const ColoredGraph m1 = ladder_M(1);
  CHECK(m1.graph.order() == 6);

  const ColoredGraph m2 = ladder_M(2);
  CHECK(m2.graph.order() == 8);
  CHECK(m2.white.size() == 3);
  CHECK(m2.yellow.size() == 2);

  for (int n = 0; n <= 6; ++n) {
    const ColoredGraph m = ladder_M(n);
    CHECK(m.graph.order() == 2 * n + 4);
    CHECK(m.attachment_in().size() == 3);
    CHECK(m.white.size() == 3);
    CHECK(m.graph.is_connected());
  }
}

TEST_CASE("compound and apex") {
  CHECK(apex_K1(ladder_T(0)) == complete_graph(4));

  const ColoredGraph m0 = ladder_M(0);
  const ColoredGraph t0 = ladder_T(0);
  const auto white = m0.white.to_vector();
  const auto in = t0.attachment_in().to_vector();
  Matching f;
  for (std::size_t i = 0; i < white.size(); ++i) f.emplace_back(white[i], in[i]);
  const ColoredGraph c = compound(m0, t0, f);
  CHECK(c.graph.order() == 7);
  CHECK(c.white.empty());
  const Graph eight = apex_K1(c);
  CHECK(eight.order() == 8);
  CHECK(eight.is_cubic());

  ColoredGraph edge{path_graph(2), {}, {}};
  Matching two{{white[0], 0}, {white[1], 1}};
  CHECK_THROWS_AS(compound(m0, edge, two), std::invalid_argument);

  Matching not_bijective{{white[0], in[0]}, {white[1], in[0]}, {white[2], in[2]}};
  CHECK_THROWS_AS(compound(m0, t0, not_bijective), std::invalid_argument);

  ColoredGraph bare{Graph(3, {{0, 1}, {1, 2}, {0, 2}}), {}, {}};
  CHECK_THROWS_AS(apex_K1(bare), std::invalid_argument);
}

TEST_CASE("the ten-vertex worked example is in the family") {
  const Graph fig = figure_four();
  REQUIRE(fig.is_cubic());
  auto members = family_members({{BlockKind::M, 1}, {BlockKind::T, 0}});
  CHECK(std::any_of(members.begin(), members.end(),
                    [&](const FamilyMember& m) { return static_cast<bool>(are_isomorphic(m.graph, fig)); }));
  const auto all10 = enumerate_family(10);
  CHECK(std::any_of(all10.begin(), all10.end(),
                    [&](const FamilyMember& m) { return static_cast<bool>(are_isomorphic(m.graph, fig)); }));
  CHECK(zero_forcing_number(fig).value == 3);
}

TEST_CASE("enumerate_family small orders") {
  const auto four = enumerate_family(4);
  REQUIRE(four.size() == 1);
  CHECK(four[0].graph == complete_graph(4));
  CHECK(four[0].spec.to_string() == "apex(T0)");

  const auto six = enumerate_family(6);
  CHECK(std::any_of(six.begin(), six.end(), [](const FamilyMember& m) {
    return static_cast<bool>(are_isomorphic(m.graph, triangular_prism()));
  }));
  CHECK(enumerate_family(5).empty());
}

TEST_CASE("family members are cubic, 3-edge-connected, Z = 3 and reassemble") {
  for (int order = 4; order <= 14; order += 2) {
    const auto members = enumerate_family(order);
    CHECK(!members.empty());
    for (const FamilyMember& m : members) {
      CHECK(m.graph.order() == order);
      CHECK(m.graph.is_cubic());
      CHECK(m.graph.is_connected());
      CHECK(edge_connectivity(m.graph) >= 3);
      CHECK(zero_forcing_number(m.graph).value == 3);
      CHECK(assemble(m.spec) == m.graph);
    }
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        CHECK(!are_isomorphic(members[i].graph, members[j].graph));
  }
}

TEST_CASE("permutation prisms") {
  const Graph cube = permutation_prism(4, std::nullopt);
  CHECK(cube.order() == 8);
  CHECK(cube.is_cubic());
  CHECK(is_bipartite(cube));
  CHECK(girth(cube) == 4);

  for (int n = 4; n <= 8; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const Graph g = permutation_prism(n, std::pair(i, j));
        CHECK(g.order() == 2 * n);
        CHECK(g.is_cubic());
        CHECK(g.is_connected());
      }

  // (2 5) on C6: spokes u2-v5 and u5-v2; u1 u2 v2 v1 is no longer a square
  // but u3 u4 v4 v3 still is.
  const Graph g = permutation_prism(6, std::pair(2, 5));
  CHECK(g.adjacent(1, 6 + 4));
  CHECK(g.adjacent(4, 6 + 1));
  CHECK(girth(g) == 4);

  CHECK_THROWS_AS(permutation_prism(3, std::pair(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(permutation_prism(5, std::pair(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(permutation_prism(5, std::pair(0, 2)), std::invalid_argument);
  CHECK_THROWS_AS(permutation_prism(5, std::pair(1, 6)), std::invalid_argument);
}

TEST_CASE("heawood") {
  const Graph g = heawood();
  CHECK(g.order() == 14);
  CHECK(g.is_cubic());
  CHECK(is_bipartite(g));
  CHECK(girth(g) == 6);
  for (Vertex p = 0; p < 7; ++p)
    for (Vertex q = p + 1; q < 7; ++q) {
      const VertexSet common = g.neighbors(p) & g.neighbors(q);
      CHECK(common.size() == 1);
    }
}

TEST_CASE("counterexample16") {
  const Graph g = counterexample16();
  CHECK(g.order() == 16);
  CHECK(g.is_cubic());
  CHECK(g.is_connected());
  CHECK(edge_connectivity(g) == 1);
}

TEST_CASE("necklace") {
  for (int b = 2; b <= 6; ++b) {
    const Graph g = necklace(b);
    CHECK(g.order() == 6 * b);
    CHECK(g.is_cubic());
    CHECK(g.is_connected());
    CHECK(oracle::twin_sum(g) == 2 * b);
  }
  CHECK_THROWS_AS(necklace(1), std::invalid_argument);
}

TEST_CASE("every named generator is connected and cubic") {
  std::vector<Graph> all = {heawood(), counterexample16(), necklace(3), petersen(),
                            permutation_prism(7, std::pair(3, 6))};
  for (int order = 4; order <= 12; order += 2)
    for (auto& m : enumerate_family(order)) all.push_back(m.graph);
  for (const Graph& g : all) {
    CHECK(g.is_connected());
    CHECK(g.is_cubic());
  }
}
