#pragma once

#include <random>

#include "matchkit/graph.hpp"

namespace testutil {

using matchkit::Edge;
using matchkit::Graph;
using matchkit::Vertex;

inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back(matchkit::make_edge(i, (i + 1) % 5));  // outer cycle
    e.push_back(matchkit::make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
    e.push_back({i, i + 5});  // spokes
  }
  return Graph::from_edges(10, e);
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

inline Graph permuted(const Graph& g, std::mt19937& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> e;
  for (const auto& [u, v] : g.edges())
    e.push_back(matchkit::make_edge(perm[static_cast<std::size_t>(u)],
                                    perm[static_cast<std::size_t>(v)]));
  return Graph::from_edges(g.vertex_count(), e);
}

}  // namespace testutil
