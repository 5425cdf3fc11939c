#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "zforce/catalog.hpp"
#include "zforce/families.hpp"
#include "zforce/graph.hpp"

using namespace zforce;

namespace {

std::vector<Vertex> random_perm(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("graph rejects loops, duplicates and bad ids") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  CHECK_THROWS_AS(g.add_edge(-1, 0), std::out_of_range);
  CHECK(g.adjacent(1, 0));
  CHECK(g.size() == 1);
}

TEST_CASE("handshake and adjacency symmetry") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const Graph g = random_graph(n, 0.3, rng);
    int degree_sum = 0;
    for (Vertex v = 0; v < n; ++v) {
      degree_sum += g.degree(v);
      for (Vertex w : g.neighbors(v)) CHECK(g.adjacent(w, v));
      CHECK(!g.adjacent(v, v));
    }
    CHECK(degree_sum == 2 * g.size());
    CHECK(static_cast<int>(g.edges().size()) == g.size());
  }
}

TEST_CASE("graph6 fixed examples") {
  const Graph single = parse_graph6("@");
  CHECK(single.order() == 1);
  CHECK(single.size() == 0);

  const Graph k4 = parse_graph6("C~");
  CHECK(k4 == complete_graph(4));

  const Graph p4 = parse_graph6("Ch");
  CHECK(p4 == path_graph(4));
  CHECK(write_graph6(p4) == "Ch");
  CHECK(write_graph6(complete_graph(4)) == "C~");
  CHECK(write_graph6(Graph(1)) == "@");

  CHECK(parse_graph6(">>graph6<<C~\n") == k4);
  CHECK(parse_graph6("C~\r\n") == k4);
}

TEST_CASE("graph6 errors carry offsets") {
  auto offset_of = [](std::string_view text) -> long {
    try {
      parse_graph6(text);
    } catch (const Graph6Error& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("~") == 0);      // multi-byte size form
  CHECK(offset_of("C") == 1);      // missing data
  CHECK(offset_of("C~~") == 2);    // trailing byte
  CHECK(offset_of("C\x7f") == 1);  // outside printable range
  CHECK(offset_of("A@") == 1);     // padding bit set
  CHECK(parse_graph6("A_").size() == 1);
  CHECK_THROWS_AS(write_graph6(Graph(0)), std::invalid_argument);
  CHECK_THROWS_AS(write_graph6(Graph(63)), std::invalid_argument);
}

TEST_CASE("graph6 round trip and independent encoder") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 62);
    const Graph g = random_graph(n, trial % 2 ? 0.5 : 0.1, rng);
    const std::string s = write_graph6(g);
    CHECK(s == oracle::graph6(g));
    CHECK(parse_graph6(s) == g);
  }
}

TEST_CASE("edge connectivity") {
  CHECK(edge_connectivity(complete_graph(4)) == 3);
  CHECK(edge_connectivity(cycle_graph(6)) == 2);
  CHECK(edge_connectivity(path_graph(5)) == 1);
  CHECK(edge_connectivity(Graph(1)) == 0);
  Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(edge_connectivity(two_triangles) == 0);
  CHECK(edge_connectivity(petersen()) == 3);
  CHECK(edge_connectivity(complete_graph(7)) == 6);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = random_connected_graph(n, 0.35, rng);
    const int k = edge_connectivity(g);
    CHECK(k <= g.min_degree());
    const int brute = oracle::edge_connectivity_upto(g, 3);
    if (brute <= 3) CHECK(k == brute);
    else CHECK(k >= 4);
  }
}

TEST_CASE("girth") {
  CHECK(girth(heawood()) == 6);
  CHECK(girth(petersen()) == 5);
  CHECK(girth(complete_graph(4)) == 3);
  CHECK(!girth(path_graph(6)).has_value());
  CHECK(girth(permutation_prism(4, std::nullopt)) == 4);
}

TEST_CASE("isomorphism fixed examples") {
  std::mt19937_64 rng(2);
  const Graph k4 = complete_graph(4);
  const auto p = random_perm(4, rng);
  const auto w = are_isomorphic(k4, k4.relabelled(p));
  REQUIRE(w);
  CHECK(is_isomorphism(k4, k4.relabelled(p), *w.mapping));

  Graph two_c3(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(!are_isomorphic(cycle_graph(6), two_c3));

  const Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(!are_isomorphic(prism, complete_bipartite(3, 3)));
}

TEST_CASE("isomorphism is an equivalence and matches brute force") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 24);
    const Graph g = random_graph(n, 0.3, rng);
    const auto self = are_isomorphic(g, g);
    REQUIRE(self);
    CHECK(is_isomorphism(g, g, *self.mapping));

    const Graph h = g.relabelled(random_perm(n, rng));
    const auto fwd = are_isomorphic(g, h);
    const auto back = are_isomorphic(h, g);
    REQUIRE(fwd);
    REQUIRE(back);
    CHECK(is_isomorphism(g, h, *fwd.mapping));
    CHECK(is_isomorphism(h, g, *back.mapping));
    CHECK(invariant_hash(g) == invariant_hash(h));

    const Graph other = random_graph(n, 0.3, rng);
    CHECK(static_cast<bool>(are_isomorphic(g, other)) == static_cast<bool>(are_isomorphic(other, g)));
  }

  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(n, 0.5, rng);
    // Same edge count keeps the pair interesting for the oracle.
    Graph h = random_graph(n, 0.5, rng);
    if (trial % 3 == 0) h = g.relabelled(random_perm(n, rng));
    const auto w = are_isomorphic(g, h);
    CHECK(static_cast<bool>(w) == oracle::isomorphic(g, h));
    if (w) CHECK(is_isomorphism(g, h, *w.mapping));
  }
}

TEST_CASE("isomorphism on regular graphs with equal local invariants") {
  // Both cubic on 8 vertices with no triangles; only the cube is bipartite.
  const Graph cube = permutation_prism(4, std::nullopt);
  const Graph mobius(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0},
                         {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  CHECK(!are_isomorphic(cube, mobius));
  CHECK(oracle::isomorphic(cube, cube.relabelled(std::vector<Vertex>{7, 6, 5, 4, 3, 2, 1, 0})));
}

TEST_CASE("components and induced subgraphs") {
  Graph g(7, {{0, 1}, {1, 2}, {3, 4}, {5, 6}});
  const auto parts = g.components();
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].to_string() == "{0,1,2}");
  CHECK(parts[2].to_string() == "{5,6}");
  const Graph sub = g.induced(parts[0]);
  CHECK(sub == path_graph(3));
  CHECK(!g.is_connected());
}
