#pragma once

#include <deque>
#include <functional>
#include <limits>
#include <vector>

#include "matchkit/graph.hpp"
#include "matchkit/matching.hpp"

namespace matchkit {

/// Maximum matching between two disjoint vertex sets together with an
/// equal-size vertex cover of all cross edges (Konig witness).
struct KonigCertificate {
  Matching matching;
  VertexSet cover;
};

/// Maximum matching among edges between `left` and `right` (edges inside
/// either set are ignored), by Hopcroft-Karp, plus the Konig cover derived
/// from alternating reachability.
inline KonigCertificate bipartite_max_matching(const Graph& g, const VertexSet& left,
                                               const VertexSet& right) {
  if (!set_intersection(left, right).empty())
    throw std::invalid_argument("bipartite_max_matching: sides are not disjoint");

  const int nl = left.size(), nr = right.size();
  std::vector<int> right_index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int i = 0; i < nr; ++i) right_index[static_cast<std::size_t>(right[i])] = i;

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nl));
  for (int i = 0; i < nl; ++i)
    for (Vertex w : g.neighbors(left[i]))
      if (right_index[static_cast<std::size_t>(w)] >= 0)
        adj[static_cast<std::size_t>(i)].push_back(right_index[static_cast<std::size_t>(w)]);

  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> mate_l(static_cast<std::size_t>(nl), -1), mate_r(static_cast<std::size_t>(nr), -1);
  std::vector<int> dist(static_cast<std::size_t>(nl), 0);

  auto bfs = [&]() -> bool {
    std::deque<int> q;
    bool found = false;
    for (int u = 0; u < nl; ++u) {
      if (mate_l[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = 0;
        q.push_back(u);
      } else {
        dist[static_cast<std::size_t>(u)] = kInf;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        int w = mate_r[static_cast<std::size_t>(v)];
        if (w < 0) {
          found = true;
        } else if (dist[static_cast<std::size_t>(w)] == kInf) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          q.push_back(w);
        }
      }
    }
    return found;
  };

  std::function<bool(int)> dfs = [&](int u) -> bool {
    for (int v : adj[static_cast<std::size_t>(u)]) {
      int w = mate_r[static_cast<std::size_t>(v)];
      if (w < 0 || (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)] + 1 && dfs(w))) {
        mate_l[static_cast<std::size_t>(u)] = v;
        mate_r[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    dist[static_cast<std::size_t>(u)] = kInf;
    return false;
  };

  while (bfs())
    for (int u = 0; u < nl; ++u)
      if (mate_l[static_cast<std::size_t>(u)] < 0) dfs(u);

  // Konig: Z = vertices reachable from unmatched left vertices along
  // alternating paths; cover = (L - Z) union (R intersect Z).
  std::vector<char> zl(static_cast<std::size_t>(nl), 0), zr(static_cast<std::size_t>(nr), 0);
  std::deque<int> q;
  for (int u = 0; u < nl; ++u)
    if (mate_l[static_cast<std::size_t>(u)] < 0) {
      zl[static_cast<std::size_t>(u)] = 1;
      q.push_back(u);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (zr[static_cast<std::size_t>(v)] || mate_l[static_cast<std::size_t>(u)] == v) continue;
      zr[static_cast<std::size_t>(v)] = 1;
      int w = mate_r[static_cast<std::size_t>(v)];
      if (w >= 0 && !zl[static_cast<std::size_t>(w)]) {
        zl[static_cast<std::size_t>(w)] = 1;
        q.push_back(w);
      }
    }
  }

  std::vector<Edge> medges;
  for (int u = 0; u < nl; ++u)
    if (mate_l[static_cast<std::size_t>(u)] >= 0)
      medges.push_back(make_edge(left[u], right[mate_l[static_cast<std::size_t>(u)]]));
  std::vector<Vertex> cover;
  for (int u = 0; u < nl; ++u)
    if (!zl[static_cast<std::size_t>(u)]) cover.push_back(left[u]);
  for (int v = 0; v < nr; ++v)
    if (zr[static_cast<std::size_t>(v)]) cover.push_back(right[v]);

  KonigCertificate cert{Matching::from_edges(g, std::move(medges)), VertexSet(std::move(cover))};

  if (cert.cover.size() != cert.matching.size())
    throw std::logic_error("bipartite_max_matching: Konig equality violated");
  for (int i = 0; i < nl; ++i)
    for (Vertex w : g.neighbors(left[i]))
      if (right_index[static_cast<std::size_t>(w)] >= 0 && !cert.cover.contains(left[i]) &&
          !cert.cover.contains(w))
        throw std::logic_error("bipartite_max_matching: cover misses a cross edge");
  return cert;
}

}  // namespace matchkit
