#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "matchkit/connectivity.hpp"
#include "matchkit/constructions.hpp"
#include "matchkit/decomposition.hpp"
#include "matchkit/enumerate.hpp"
#include "oracles.hpp"

using namespace matchkit;

TEST_CASE("Gallai-Edmonds partition on the spec examples", "[decomposition]") {
  GallaiEdmonds c5 = gallai_edmonds(Graph::cycle(5));
  CHECK(c5.D == VertexSet::range(5));
  CHECK(c5.A.empty());
  CHECK(c5.C.empty());
  CHECK(c5.def == 1);

  GallaiEdmonds k4 = gallai_edmonds(Graph::complete(4));
  CHECK(k4.D.empty());
  CHECK(k4.A.empty());
  CHECK(k4.C == VertexSet::range(4));

  GallaiEdmonds star = gallai_edmonds(Graph::complete_bipartite(1, 3));
  CHECK(star.D == VertexSet{1, 2, 3});
  CHECK(star.A == VertexSet{0});
  CHECK(star.C.empty());
  CHECK(star.def == 2);
}

TEST_CASE("D is exactly the set of sometimes-exposed vertices", "[decomposition]") {
  std::mt19937 rng(43);
  for (int round = 0; round < 60; ++round) {
    Graph g = testutil::random_graph(rng, 8, 0.3);
    GallaiEdmonds ge = gallai_edmonds(g);
    VertexSet all = VertexSet::range(8);
    for (Vertex v = 0; v < 8; ++v) {
      VertexSet keep = all;
      keep.erase(v);
      int nu_minus = matching_number(induced(g, keep));
      if (ge.D.contains(v)) {
        // some maximum matching misses v: a nu-sized matching avoiding v
        CHECK(nu_minus == ge.nu);
      } else {
        CHECK(nu_minus == ge.nu - 1);
      }
      // A = neighbors of D outside D
      bool near_d = false;
      for (Vertex w : g.neighbors(v)) near_d = near_d || ge.D.contains(w);
      CHECK(ge.A.contains(v) == (!ge.D.contains(v) && near_d));
    }
  }
}

TEST_CASE("factor-critical recognition", "[decomposition]") {
  CHECK(is_factor_critical(Graph::cycle(5)));
  CHECK(is_factor_critical(Graph::complete(1)));
  CHECK_FALSE(is_factor_critical(Graph::complete(4)));
  CHECK_FALSE(is_factor_critical(Graph::path(5)));
  CHECK(is_factor_critical(build({Family::g_mn, {3, 3}}).graph));
}

TEST_CASE("randomly matchable graphs are the balanced complete families", "[decomposition]") {
  CHECK(is_randomly_matchable(Graph::complete(6)));
  CHECK(is_randomly_matchable(Graph::complete_bipartite(3, 3)));
  CHECK_FALSE(is_randomly_matchable(Graph::path(4)));
  CHECK_FALSE(is_randomly_matchable(Graph::cycle(5)));
  CHECK(is_randomly_matchable(Graph::empty(0)));
  CHECK_FALSE(is_randomly_matchable(Graph::complete(1)));
  // disconnected: definitional route only
  CHECK(is_randomly_matchable(Graph::from_edges(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("randomly matchable agrees with the brute-force definition", "[decomposition]") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : nonisomorphic_graphs(n, true)) {
      bool brute = oracle::is_equimatchable(g) &&
                   2 * oracle::max_matching_size(g) == g.vertex_count();
      REQUIRE(is_randomly_matchable(g) == brute);
      REQUIRE(structural_randomly_matchable(g) == brute);
    }
}

TEST_CASE("equimatchable positives", "[decomposition]") {
  CHECK(is_equimatchable(Graph::complete_bipartite(4, 4)).equimatchable);
  CHECK(is_equimatchable(Graph::complete(6)).equimatchable);
  CHECK(is_equimatchable(Graph::cycle(7)).equimatchable);
}

TEST_CASE("the C_9 witness is the first independent triple that extends", "[decomposition]") {
  EquimatchResult r = is_equimatchable(Graph::cycle(9));
  REQUIRE_FALSE(r.equimatchable);
  REQUIRE(r.witness.has_value());
  // lexicographically first witness
  CHECK(r.witness->exposed == VertexSet{0, 3, 6});
  CHECK(r.witness->maximal.edges() == std::vector<Edge>{{1, 2}, {4, 5}, {7, 8}});
  // the witness revalidates: maximal yet smaller than nu
  Graph c9 = Graph::cycle(9);
  CHECK(is_maximal(c9, r.witness->maximal));
  CHECK(r.witness->maximal.size() < matching_number(c9));
  for (Vertex v : r.witness->exposed) CHECK_FALSE(r.witness->maximal.covers(v));
}

TEST_CASE("equimatchability matches the enumeration oracle on small graphs", "[decomposition]") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : nonisomorphic_graphs(n, true))
      REQUIRE(is_equimatchable(g).equimatchable == oracle::is_equimatchable(g));
  std::mt19937 rng(47);
  for (int round = 0; round < 300; ++round) {
    int n = 5 + static_cast<int>(rng() % 6);
    Graph g = testutil::random_graph(rng, n, 0.35);
    CHECK(is_equimatchable(g).equimatchable == oracle::is_equimatchable(g));
  }
}

TEST_CASE("two-connected equimatchable graphs are bipartite or factor-critical",
          "[decomposition]") {
  for (int n = 3; n <= 6; ++n)
    for (const Graph& g : nonisomorphic_graphs(n, true)) {
      if (vertex_connectivity(g) < 2) continue;
      if (!is_equimatchable(g).equimatchable) continue;
      CHECK((is_bipartite(g) || is_factor_critical(g)));
    }
}

TEST_CASE("removing adjacent pairs from the balanced families", "[decomposition]") {
  for (int n = 2; n <= 4; ++n) {
    Graph k2n = Graph::complete(2 * n);
    for (const auto& [u, v] : k2n.edges()) {
      VertexSet keep = VertexSet::range(2 * n);
      keep.erase(u);
      keep.erase(v);
      CHECK(is_complete(induced(k2n, keep)));
    }
    Graph knn = Graph::complete_bipartite(n, n);
    for (const auto& [u, v] : knn.edges()) {
      VertexSet keep = VertexSet::range(2 * n);
      keep.erase(u);
      keep.erase(v);
      CHECK(is_complete_bipartite_sizes(induced(knn, keep), n - 1, n - 1));
    }
  }
}

TEST_CASE("pair removal observation on balanced bipartite graphs", "[decomposition]") {
  for (int n : {1, 2, 4}) {
    Verdict v = observation_knn_removal_check(n);
    CHECK(v.status == Status::holds);
  }
  CHECK_THROWS_AS(observation_knn_removal_check(0), std::invalid_argument);
}

TEST_CASE("property report flag implications", "[decomposition]") {
  std::mt19937 rng(53);
  for (int round = 0; round < 40; ++round) {
    Graph g = testutil::random_graph(rng, 7, 0.4);
    bool rm = is_randomly_matchable(g);
    bool em = is_equimatchable(g).equimatchable;
    bool fc = is_factor_critical(g);
    if (rm) {
      CHECK(em);
      CHECK(deficiency(g) == 0);
    }
    if (fc) {
      CHECK(deficiency(g) == 1);
      CHECK(is_connected(g));
    }
  }
}
