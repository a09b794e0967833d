#pragma once

// Definition-level brute-force oracles for cross-checking the library.
// Everything here works from first principles (subset scans, memoized
// recursion over cover masks) and stays independent of the algorithms under
// test.

#include <cstdint>
#include <map>
#include <vector>

#include "matchkit/graph.hpp"
#include "matchkit/matching.hpp"

namespace oracle {

using matchkit::Edge;
using matchkit::Graph;
using matchkit::Vertex;
using matchkit::VertexSet;

// maximum matching size by subset DP over the uncovered-vertex mask
inline int max_matching_size(const Graph& g) {
  std::map<std::uint64_t, int> memo;
  auto edges = g.edges();
  std::function<int(std::uint64_t)> best = [&](std::uint64_t free_mask) -> int {
    auto it = memo.find(free_mask);
    if (it != memo.end()) return it->second;
    if (!free_mask) return 0;
    Vertex u = static_cast<Vertex>(__builtin_ctzll(free_mask));
    // either u stays unmatched or it takes one of its free neighbors
    int result = best(free_mask & ~(std::uint64_t{1} << u));
    for (Vertex w : g.neighbors(u))
      if ((free_mask >> w) & 1)
        result = std::max(result, 1 + best(free_mask & ~(std::uint64_t{1} << u) &
                                           ~(std::uint64_t{1} << w)));
    memo[free_mask] = result;
    return result;
  };
  return best(g.full_mask());
}

// all matchings, as edge-index subsets (recursion over the edge list)
inline void all_matchings(const Graph& g, std::vector<std::vector<Edge>>& out) {
  auto edges = g.edges();
  std::vector<Edge> cur;
  std::uint64_t cov = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    out.push_back(cur);
    for (std::size_t i = from; i < edges.size(); ++i) {
      std::uint64_t m = (std::uint64_t{1} << edges[i].first) | (std::uint64_t{1} << edges[i].second);
      if (cov & m) continue;
      cov |= m;
      cur.push_back(edges[i]);
      rec(i + 1);
      cur.pop_back();
      cov &= ~m;
    }
  };
  rec(0);
}

inline bool matching_is_maximal(const Graph& g, const std::vector<Edge>& m) {
  std::uint64_t cov = 0;
  for (const auto& [u, v] : m) cov |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
  for (const auto& [u, v] : g.edges())
    if (!((cov >> u) & 1) && !((cov >> v) & 1)) return false;
  return true;
}

inline std::vector<std::vector<Edge>> maximal_matchings(const Graph& g) {
  std::vector<std::vector<Edge>> all, out;
  all_matchings(g, all);
  for (auto& m : all)
    if (matching_is_maximal(g, m)) out.push_back(m);
  return out;
}

inline bool is_equimatchable(const Graph& g) {
  int nu = max_matching_size(g);
  for (const auto& m : maximal_matchings(g))
    if (static_cast<int>(m.size()) != nu) return false;
  return true;
}

inline bool saturating_exists(const Graph& g, const VertexSet& required) {
  std::vector<std::vector<Edge>> all;
  all_matchings(g, all);
  for (const auto& m : all) {
    std::uint64_t cov = 0;
    for (const auto& [u, v] : m) cov |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    bool ok = true;
    for (Vertex r : required) ok = ok && ((cov >> r) & 1);
    if (ok) return true;
  }
  return false;
}

inline bool isolates(const Graph& g, Vertex v, const std::vector<Edge>& m) {
  std::uint64_t cov = 0;
  for (const auto& [x, y] : m) cov |= (std::uint64_t{1} << x) | (std::uint64_t{1} << y);
  if ((cov >> v) & 1) return false;
  for (Vertex w : g.neighbors(v))
    if (!((cov >> w) & 1)) return false;
  return true;  // {v} is then a component of g - V(m)
}

// minimal isolating matchings by filtering all matchings with an exhaustive
// proper-subset minimality test
inline std::vector<std::vector<Edge>> minimal_isolating(const Graph& g, Vertex v) {
  std::vector<std::vector<Edge>> all, out;
  all_matchings(g, all);
  for (const auto& m : all) {
    if (!isolates(g, v, m)) continue;
    bool minimal = true;
    for (std::uint64_t sub = 0; sub + 1 < (std::uint64_t{1} << m.size()) && minimal; ++sub) {
      std::vector<Edge> s;
      for (std::size_t i = 0; i < m.size(); ++i)
        if ((sub >> i) & 1) s.push_back(m[i]);
      if (s.size() < m.size() && isolates(g, v, s)) minimal = false;
    }
    if (minimal) out.push_back(m);
  }
  return out;
}

inline int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  if (matchkit::is_complete(g)) return n - 1;
  for (int k = 0; k < n; ++k)
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
      if (matchkit::popcount64(sub) != k) continue;
      if (matchkit::component_masks(g, g.full_mask() & ~sub).size() >= 2) return k;
    }
  return n - 1;
}

inline int independence_number(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
    bool ind = true;
    for (std::uint64_t a = sub; a && ind; a &= a - 1) {
      Vertex u = static_cast<Vertex>(__builtin_ctzll(a));
      if (g.neighbor_mask(u) & sub) ind = false;
    }
    if (ind) best = std::max(best, matchkit::popcount64(sub));
  }
  return best;
}

// independent bit-level graph6 decoder used against the library's parser
inline Graph decode_graph6(const std::string& s) {
  std::size_t pos = 0;
  int n;
  if (static_cast<unsigned char>(s.at(0)) == 126) {
    n = (s.at(1) - 63) * 4096 + (s.at(2) - 63) * 64 + (s.at(3) - 63);
    pos = 4;
  } else {
    n = s.at(0) - 63;
    pos = 1;
  }
  std::vector<int> bits;
  for (std::size_t i = pos; i < s.size(); ++i)
    for (int b = 5; b >= 0; --b) bits.push_back((s[i] - 63 >> b) & 1);
  std::vector<Edge> edges;
  std::size_t idx = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row, ++idx)
      if (bits.at(idx)) edges.push_back({row, col});
  return Graph::from_edges(n, edges);
}

}  // namespace oracle
