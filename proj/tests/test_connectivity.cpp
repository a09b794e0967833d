#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "matchkit/connectivity.hpp"
#include "matchkit/constructions.hpp"
#include "matchkit/enumerate.hpp"
#include "oracles.hpp"

using namespace matchkit;

TEST_CASE("vertex connectivity on the spec examples", "[connectivity]") {
  CHECK(vertex_connectivity(Graph::complete(5)) == 4);
  CHECK(vertex_connectivity(testutil::petersen()) == 3);
  CHECK(vertex_connectivity(build({Family::g_mn, {3, 5}}).graph) == 3);
  CHECK(vertex_connectivity(Graph::path(5)) == 1);
  CHECK(vertex_connectivity(Graph::from_edges(4, {{0, 1}, {2, 3}})) == 0);
  CHECK(vertex_connectivity(Graph::complete(1)) == 0);
  CHECK(vertex_connectivity(Graph::complete(2)) == 1);
}

TEST_CASE("vertex connectivity agrees with brute force", "[connectivity]") {
  for (int n = 1; n <= 5; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      REQUIRE(vertex_connectivity(g) == oracle::vertex_connectivity(g));
      return true;
    });
  std::mt19937 rng(59);
  for (int round = 0; round < 400; ++round) {
    int n = 6 + static_cast<int>(rng() % 3);
    Graph g = testutil::random_graph(rng, n, 0.2 + 0.1 * (rng() % 6));
    CHECK(vertex_connectivity(g) == oracle::vertex_connectivity(g));
  }
}

TEST_CASE("minimum cuts of the 5-cycle are its non-adjacent pairs", "[connectivity]") {
  Graph c5 = Graph::cycle(5);
  auto cuts = minimum_vertex_cuts(c5);
  REQUIRE(cuts.size() == 5);
  std::vector<VertexSet> expect{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}};
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    CHECK(cuts[i].S == expect[i]);
    CHECK(cuts[i].k == 2);
    CHECK(cuts[i].parts.size() == 2);
  }
}

TEST_CASE("complete graphs have no vertex cut", "[connectivity]") {
  CHECK_THROWS_AS(minimum_vertex_cuts(Graph::complete(4)), std::domain_error);
}

TEST_CASE("the tight construction's designated set is a minimum cut", "[connectivity]") {
  LabeledGraph g3 = build({Family::gk_tight, {3}});
  bool found = false;
  for (const CutDecomposition& cd : minimum_vertex_cuts(g3.graph))
    if (cd.S == g3.roles["S"]) found = true;
  CHECK(found);
}

TEST_CASE("cut decompositions satisfy their invariants", "[connectivity]") {
  std::mt19937 rng(61);
  int seen = 0;
  while (seen < 60) {
    Graph g = testutil::random_graph(rng, 8, 0.35);
    if (is_complete(g)) continue;
    ++seen;
    int k = vertex_connectivity(g);
    for (const CutDecomposition& cd : minimum_vertex_cuts(g)) {
      CHECK(cd.k == k);
      CHECK(cd.S.size() == k);
      int covered = cd.S.size();
      for (const auto& p : cd.parts) {
        CHECK(!p.empty());
        covered += p.size();
        CHECK(is_connected(induced(g, p)));  // each part connected in G - S
      }
      CHECK(covered == 8);  // partition of V
      for (std::size_t i = 0; i < cd.parts.size(); ++i)
        for (std::size_t j = i + 1; j < cd.parts.size(); ++j)
          for (Vertex u : cd.parts[i])
            for (Vertex v : cd.parts[j]) CHECK_FALSE(g.has_edge(u, v));
      // sorted by decreasing size
      for (std::size_t i = 0; i + 1 < cd.parts.size(); ++i)
        CHECK(cd.parts[i].size() >= cd.parts[i + 1].size());
    }
  }
}

TEST_CASE("independence number on the spec examples", "[connectivity]") {
  CHECK(independence_number(Graph::complete(7)).alpha == 1);
  CHECK(independence_number(Graph::cycle(5)).alpha == 2);
  CHECK(independence_number(Graph::cycle(7)).alpha == 3);
  LabeledGraph gmn = build({Family::g_mn, {3, 3}});
  IndependenceCertificate cert = independence_number(gmn.graph);
  CHECK(cert.alpha == 3);
  // the independent 3-cut S is a maximum independent set
  CHECK(cert.witness.size() == 3);
  for (int i = 0; i < cert.witness.size(); ++i)
    for (int j = i + 1; j < cert.witness.size(); ++j)
      CHECK_FALSE(gmn.graph.has_edge(cert.witness[i], cert.witness[j]));
}

TEST_CASE("independence number agrees with brute force", "[connectivity]") {
  for (int n = 0; n <= 5; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      REQUIRE(independence_number(g).alpha == oracle::independence_number(g));
      return true;
    });
  std::mt19937 rng(67);
  for (int round = 0; round < 300; ++round) {
    int n = 6 + static_cast<int>(rng() % 5);
    Graph g = testutil::random_graph(rng, n, 0.15 + 0.1 * (rng() % 7));
    CHECK(independence_number(g).alpha == oracle::independence_number(g));
  }
}

TEST_CASE("independent edges between a component and cut subsets", "[connectivity]") {
  LabeledGraph g3 = build({Family::gk_tight, {3}});
  Matching m = independent_edges_between(g3.graph, g3.roles["C"], g3.roles["S"]);
  CHECK(m.size() == 2);  // min(|C|, |S|) = min(2, 3)

  // single-vertex component adjacent to the whole cut
  Graph star = Graph::complete_bipartite(1, 3);
  CHECK(independent_edges_between(star, VertexSet{0}, VertexSet{1, 2, 3}).size() == 1);

  CHECK_THROWS_AS(independent_edges_between(star, VertexSet{0, 1}, VertexSet{1}),
                  std::invalid_argument);

  std::mt19937 rng(71);
  for (int round = 0; round < 200; ++round) {
    int n = 6 + static_cast<int>(rng() % 3);
    Graph g = testutil::random_graph(rng, n, 0.45);
    std::uint64_t h = rng() & ((std::uint64_t{1} << n) - 1);
    std::uint64_t x = rng() & ((std::uint64_t{1} << n) - 1) & ~h;
    Matching got = independent_edges_between(g, VertexSet::from_mask(h), VertexSet::from_mask(x));
    std::vector<Edge> cross;
    for (const auto& [u, v] : g.edges()) {
      bool c = (((h >> u) & 1) && ((x >> v) & 1)) || (((h >> v) & 1) && ((x >> u) & 1));
      if (c) cross.push_back({u, v});
    }
    CHECK(got.size() == oracle::max_matching_size(Graph::from_edges(n, cross)));
  }
}
