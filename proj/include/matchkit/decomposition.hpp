#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "matchkit/bipartite.hpp"
#include "matchkit/blossom.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/verdict.hpp"

namespace matchkit {

/// Gallai-Edmonds partition: D = vertices missed by at least one maximum
/// matching, A = neighbors of D outside D, C = the rest.
struct GallaiEdmonds {
  VertexSet D, A, C;
  int nu = 0;
  int def = 0;
};

inline GallaiEdmonds gallai_edmonds(const Graph& g) {
  GallaiEdmonds ge;
  const int n = g.vertex_count();
  ge.nu = matching_number(g);
  ge.def = n - 2 * ge.nu;

  // v is missed by some maximum matching iff deleting it does not drop nu
  std::vector<Vertex> d;
  VertexSet all = VertexSet::range(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexSet keep = all;
    keep.erase(v);
    if (matching_number(induced(g, keep)) == ge.nu) d.push_back(v);
  }
  ge.D = VertexSet(std::move(d));

  std::vector<Vertex> a;
  for (Vertex v = 0; v < n; ++v) {
    if (ge.D.contains(v)) continue;
    for (Vertex w : g.neighbors(v))
      if (ge.D.contains(w)) {
        a.push_back(v);
        break;
      }
  }
  ge.A = VertexSet(std::move(a));
  ge.C = set_difference(set_difference(all, ge.D), ge.A);

  // standard count: deficiency = (#components of G[D]) - |A|
  if (is_connected(g)) {
    int cd = static_cast<int>(components(induced(g, ge.D)).size());
    if (cd - ge.A.size() != ge.def)
      throw std::logic_error("gallai_edmonds: component count does not match deficiency");
  }
  return ge;
}

/// Direct definition (g - v has a perfect matching for every v) and the
/// Gallai-Edmonds shortcut (D = V and g connected) computed side by side.
inline bool is_factor_critical(const Graph& g) {
  const int n = g.vertex_count();
  bool direct = (n % 2 == 1);
  if (direct) {
    VertexSet all = VertexSet::range(n);
    for (Vertex v = 0; v < n && direct; ++v) {
      VertexSet keep = all;
      keep.erase(v);
      direct = has_perfect_matching(induced(g, keep));
    }
  }
  GallaiEdmonds ge = gallai_edmonds(g);
  bool shortcut = n % 2 == 1 && ge.D.size() == n && is_connected(g);
  if (direct != shortcut)
    throw std::logic_error("is_factor_critical: definition and decomposition disagree");
  return direct;
}

/// Witness that some maximal matching is not maximum: an independent exposed
/// set of size deficiency+2, the saturating matching that pins its
/// neighborhood, and the resulting small maximal matching.
struct EquimatchWitness {
  VertexSet exposed;
  Matching saturating;
  Matching maximal;
};

struct EquimatchResult {
  bool equimatchable = false;
  std::optional<EquimatchWitness> witness;
};

/// Equimatchability via witness search.
///
/// With d = deficiency(g), g fails to be equimatchable iff some independent
/// set I with |I| = d+2 admits a matching of g - I saturating N(I) - I: such
/// a matching extends (inside g - I) to a maximal matching of g exposing all
/// of I, hence of size below nu. Independent sets are scanned in increasing
/// lexicographic order and the first witness is returned.
inline EquimatchResult is_equimatchable(const Graph& g) {
  const int n = g.vertex_count();
  const int want = deficiency(g) + 2;
  EquimatchResult result;
  result.equimatchable = true;
  if (want > n) return result;

  std::vector<Vertex> pick;
  VertexSet all = VertexSet::range(n);

  std::function<bool(Vertex)> scan = [&](Vertex from) -> bool {
    if (static_cast<int>(pick.size()) == want) {
      VertexSet exposed{std::vector<Vertex>(pick)};
      std::vector<Vertex> nbhd;
      for (Vertex v : exposed)
        for (Vertex w : g.neighbors(v))
          if (!exposed.contains(w)) nbhd.push_back(w);
      VertexSet required{std::move(nbhd)};

      InducedSubgraph rest = induced_subgraph(g, set_difference(all, exposed));
      std::vector<Vertex> req_local;
      for (Vertex v : required)
        req_local.push_back(rest.from_parent[static_cast<std::size_t>(v)]);
      auto sat = saturating_matching(rest.graph, VertexSet(std::move(req_local)));
      if (!sat) return false;

      std::vector<Edge> sat_edges;
      for (const auto& [a, b] : sat->edges())
        sat_edges.push_back(make_edge(rest.to_parent[static_cast<std::size_t>(a)],
                                      rest.to_parent[static_cast<std::size_t>(b)]));
      Matching sat_g = Matching::from_edges(g, sat_edges);

      Matching max_local = extend_to_maximal(rest.graph, *sat);
      std::vector<Edge> max_edges;
      for (const auto& [a, b] : max_local.edges())
        max_edges.push_back(make_edge(rest.to_parent[static_cast<std::size_t>(a)],
                                      rest.to_parent[static_cast<std::size_t>(b)]));
      Matching max_g = Matching::from_edges(g, max_edges);
      if (!is_maximal(g, max_g))
        throw std::logic_error("is_equimatchable: witness matching is not maximal");

      result.equimatchable = false;
      result.witness = EquimatchWitness{exposed, sat_g, max_g};
      return true;
    }
    for (Vertex v = from; v < n; ++v) {
      bool independent = true;
      for (Vertex u : pick)
        if (g.has_edge(u, v)) {
          independent = false;
          break;
        }
      if (!independent) continue;
      pick.push_back(v);
      if (scan(v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };

  scan(0);
  return result;
}

/// K_0, K_{2n}, or K_{n,n}: the structural face of connected randomly
/// matchable graphs. The word-size fast path; no allocation.
inline bool subset_structural_randomly_matchable(const Graph& g, std::uint64_t subset) {
  int cnt = popcount64(subset);
  if (cnt == 0) return true;
  if (cnt % 2 != 0) return false;
  if (!subset_connected(g, subset)) return false;
  if (subset_is_complete(g, subset)) return true;
  // connected K_{n,n}: biregular, n = cnt/2, and bipartite
  const int half = cnt / 2;
  for (std::uint64_t c = subset; c; c &= c - 1)
    if (popcount64(g.neighbor_mask(static_cast<Vertex>(__builtin_ctzll(c))) & subset) != half)
      return false;
  // 2-color from the lowest vertex
  std::uint64_t side0 = subset & (~subset + 1), side1 = 0;
  for (;;) {
    std::uint64_t n0 = 0, n1 = 0;
    for (std::uint64_t c = side0; c; c &= c - 1)
      n1 |= g.neighbor_mask(static_cast<Vertex>(__builtin_ctzll(c))) & subset;
    for (std::uint64_t c = side1; c; c &= c - 1)
      n0 |= g.neighbor_mask(static_cast<Vertex>(__builtin_ctzll(c))) & subset;
    if ((n0 & side1) || (n1 & side0)) return false;  // odd cycle
    std::uint64_t g0 = side0 | n0, g1 = side1 | n1;
    if (g0 == side0 && g1 == side1) break;
    side0 = g0;
    side1 = g1;
  }
  if (side0 & side1) return false;
  return popcount64(side0) == half && popcount64(side1) == half;
}

/// Structural test for connected graphs (K_0 counts as randomly matchable:
/// it is the n = 0 complete graph and closes the removal recurrences).
inline bool structural_randomly_matchable(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  if (n % 2 != 0 || !is_connected(g)) return false;
  if (is_complete(g)) return true;
  return is_complete_bipartite_sizes(g, n / 2, n / 2);
}

/// Equimatchable with a perfect matching. For connected graphs the
/// definitional route must coincide with the structural K_{2n} / K_{n,n}
/// test; a mismatch is an internal error, never a return value.
inline bool is_randomly_matchable(const Graph& g) {
  bool definitional = deficiency(g) == 0 && is_equimatchable(g).equimatchable;
  if (is_connected(g)) {
    bool structural = structural_randomly_matchable(g);
    if (definitional != structural)
      throw std::logic_error("is_randomly_matchable: routes disagree");
  }
  return definitional;
}

/// Fast-path predicate used in checker inner loops: connected and
/// structurally K_0 / K_{2n} / K_{n,n}. Equivalence with the definitional
/// route is enforced by is_randomly_matchable and its exhaustive tests.
inline bool is_connected_randomly_matchable(const Graph& g) {
  return structural_randomly_matchable(g);
}

/// Over K_{n,n} and every vertex pair {u,v}: if K_{n,n} - {u,v} is randomly
/// matchable then u and v are adjacent.
inline Verdict observation_knn_removal_check(int n) {
  if (n < 1) throw std::invalid_argument("observation_knn_removal_check: n must be >= 1");
  Graph g = Graph::complete_bipartite(n, n);
  Verdict v{Statement::knn_pair_removal, Status::holds, Json::object()};
  VertexSet all = VertexSet::range(2 * n);
  int checked = 0;
  for (Vertex a = 0; a < 2 * n; ++a)
    for (Vertex b = a + 1; b < 2 * n; ++b) {
      VertexSet keep = all;
      keep.erase(a);
      keep.erase(b);
      ++checked;
      if (is_randomly_matchable(induced(g, keep)) && !g.has_edge(a, b)) {
        v.status = Status::fails;
        v.certificate["violating_pair"] = Json::array({a, b});
        return v;
      }
    }
  v.certificate["pairs_checked"] = checked;
  v.certificate["n"] = n;
  return v;
}

/// Aggregated flags and numbers for one graph; alpha and kappa are filled by
/// the connectivity layer.
struct PropertyReport {
  bool factor_critical = false;
  bool equimatchable = false;
  bool randomly_matchable = false;
  bool bipartite = false;
  bool connected = false;
  int nu = 0;
  int def = 0;
  int alpha = -1;
  int kappa = -1;
};

inline Json to_json(const PropertyReport& r) {
  Json j;
  j["nu"] = r.nu;
  j["def"] = r.def;
  j["alpha"] = r.alpha;
  j["kappa"] = r.kappa;
  Json flags;
  flags["factor_critical"] = r.factor_critical;
  flags["equimatchable"] = r.equimatchable;
  flags["randomly_matchable"] = r.randomly_matchable;
  flags["bipartite"] = r.bipartite;
  flags["connected"] = r.connected;
  j["flags"] = flags;
  return j;
}

}  // namespace matchkit
