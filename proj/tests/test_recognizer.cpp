#include <doctest.h>

#include <thread>

#include "zforce/catalog.hpp"
#include "zforce/families.hpp"
#include "zforce/forcing.hpp"
#include "zforce/recognizer.hpp"

using namespace zforce;

TEST_CASE("recognizer examples") {
  const auto k4 = recognize_z3(complete_graph(4));
  CHECK(k4.member);
  REQUIRE(k4.spec);
  CHECK(k4.spec->to_string() == "apex(T0)");
  CHECK(k4.summary() == "apex(T0)");

  const auto prism = recognize_z3(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}));
  CHECK(prism.member);
  REQUIRE(prism.spec);
  CHECK(prism.spec->to_string() == "apex(T1)");

  const auto hw = recognize_z3(heawood());
  CHECK(!hw.member);
  CHECK(hw.no_forcing_triple);
  CHECK(hw.zero_forcing_number == 6);
  CHECK(hw.summary() == "Z=6");

  const auto k33 = recognize_z3(complete_bipartite(3, 3));
  CHECK(!k33.member);
  CHECK(k33.zero_forcing_number == 4);

  const auto cex = recognize_z3(counterexample16());
  CHECK(!cex.member);
  CHECK(cex.edge_connectivity < 3);
  CHECK(cex.summary().starts_with("kappa'="));

  CHECK_THROWS_AS(recognize_z3(cycle_graph(5)), std::invalid_argument);
  Graph two_k4(8);
  for (int base : {0, 4})
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) two_k4.add_edge(base + u, base + v);
  CHECK_THROWS_AS(recognize_z3(two_k4), std::invalid_argument);
}

TEST_CASE("member certificates reassemble onto the input") {
  std::mt19937_64 rng(4);
  for (int order = 4; order <= 12; order += 2) {
    for (const Graph& g : connected_cubic_graphs(order)) {
      std::vector<Vertex> perm(order);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Graph h = g.relabelled(perm);
      const auto r = recognize_z3(h);
      if (!r.member) continue;
      REQUIRE(r.spec);
      CHECK(is_isomorphism(h, assemble(*r.spec), r.mapping));
      CHECK(r.edge_connectivity >= 3);
    }
  }
}

TEST_CASE("verdict agrees with the solver on all connected cubic graphs up to 12") {
  for (int order = 4; order <= 12; order += 2) {
    for (const Graph& g : connected_cubic_graphs(order)) {
      const auto r = recognize_z3(g);
      const int z = zero_forcing_number(g).value;
      CHECK(r.member == (z == 3));
      if (edge_connectivity(g) < 3) CHECK(!r.member);
      if (!r.member && r.zero_forcing_number) CHECK(*r.zero_forcing_number == z);
    }
  }
}

TEST_CASE("catalog cache is safe under concurrent first use") {
  std::vector<std::jthread> workers;
  std::vector<std::size_t> sizes(8);
  for (int i = 0; i < 8; ++i)
    workers.emplace_back([i, &sizes] { sizes[i] = family_catalog(14).size(); });
  workers.clear();
  for (std::size_t s : sizes) CHECK(s == enumerate_family(14).size());
  CHECK(&family_catalog(14) == &family_catalog(14));
}
