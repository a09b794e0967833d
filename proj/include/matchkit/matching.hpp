#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matchkit/graph.hpp"

namespace matchkit {

/// Set of pairwise non-incident edges of one graph. Edges are normalized
/// (u < v) and kept in lexicographic order.
class Matching {
 public:
  Matching() = default;

  /// Validates against g: every edge present, edges pairwise non-incident.
  static Matching from_edges(const Graph& g, std::vector<Edge> edges) {
    std::vector<char> hit(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto& e : edges) {
      e = make_edge(e.first, e.second);
      if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument("matching edge not in graph: " +
                                    std::to_string(e.first) + "-" + std::to_string(e.second));
      for (Vertex v : {e.first, e.second}) {
        if (hit[static_cast<std::size_t>(v)])
          throw std::invalid_argument("matching edges share vertex " + std::to_string(v));
        hit[static_cast<std::size_t>(v)] = 1;
      }
    }
    std::sort(edges.begin(), edges.end());
    Matching m;
    m.edges_ = std::move(edges);
    return m;
  }

  /// From a mate array (mate[v] = partner or -1).
  static Matching from_mates(const Graph& g, const std::vector<Vertex>& mate) {
    std::vector<Edge> es;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (mate[static_cast<std::size_t>(v)] > v)
        es.push_back({v, mate[static_cast<std::size_t>(v)]});
    return from_edges(g, std::move(es));
  }

  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }

  VertexSet covered() const {
    std::vector<Vertex> v;
    v.reserve(edges_.size() * 2);
    for (const auto& [a, b] : edges_) {
      v.push_back(a);
      v.push_back(b);
    }
    return VertexSet(std::move(v));
  }

  bool covers(Vertex v) const {
    for (const auto& [a, b] : edges_)
      if (a == v || b == v) return true;
    return false;
  }

  std::uint64_t covered_mask() const {
    std::uint64_t m = 0;
    for (const auto& [a, b] : edges_) {
      if (b >= 64) throw std::domain_error("covered_mask: vertex beyond word range");
      m |= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    }
    return m;
  }

  /// Report serialization: sorted "u-v" pair list.
  std::vector<std::string> pair_list() const {
    std::vector<std::string> out;
    for (const auto& [a, b] : edges_)
      out.push_back(std::to_string(a) + "-" + std::to_string(b));
    return out;
  }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> edges_;
};

/// True iff no edge of g has both endpoints uncovered by m.
inline bool is_maximal(const Graph& g, const Matching& m) {
  Matching checked = Matching::from_edges(g, m.edges());  // validates input
  std::vector<char> cov(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& [a, b] : checked.edges()) cov[static_cast<std::size_t>(a)] = cov[static_cast<std::size_t>(b)] = 1;
  for (const auto& [u, v] : g.edges())
    if (!cov[static_cast<std::size_t>(u)] && !cov[static_cast<std::size_t>(v)]) return false;
  return true;
}

/// Greedy completion over the canonical (lexicographic) edge order.
inline Matching extend_to_maximal(const Graph& g, const Matching& m) {
  std::vector<Edge> es = Matching::from_edges(g, m.edges()).edges();
  std::vector<char> cov(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& [a, b] : es) cov[static_cast<std::size_t>(a)] = cov[static_cast<std::size_t>(b)] = 1;
  for (const auto& [u, v] : g.edges())
    if (!cov[static_cast<std::size_t>(u)] && !cov[static_cast<std::size_t>(v)]) {
      cov[static_cast<std::size_t>(u)] = cov[static_cast<std::size_t>(v)] = 1;
      es.push_back({u, v});
    }
  return Matching::from_edges(g, std::move(es));
}

/// Item budget shared by enumeration loops; `truncated` records that some
/// part of the search space was not visited. An optional deadline turns the
/// budget wall-clock bounded (checked every 4096 items); deterministic runs
/// leave it unset.
struct EnumBudget {
  std::size_t remaining = static_cast<std::size_t>(-1);
  bool truncated = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  bool take() {
    if (remaining == 0) {
      truncated = true;
      return false;
    }
    --remaining;
    if (deadline && (remaining & 0xfff) == 0 &&
        std::chrono::steady_clock::now() > *deadline) {
      truncated = true;
      return false;
    }
    return true;
  }
};

namespace detail {

template <typename F>
bool enumerate_matchings_rec(const std::vector<Edge>& edges, std::size_t from,
                             std::vector<Edge>& cur, std::vector<char>& cov,
                             int size_cap, EnumBudget& budget, F& f) {
  if (!budget.take()) return false;
  if (!f(static_cast<const std::vector<Edge>&>(cur))) return false;
  if (size_cap >= 0 && static_cast<int>(cur.size()) >= size_cap) return true;
  for (std::size_t i = from; i < edges.size(); ++i) {
    const auto& [u, v] = edges[i];
    if (cov[static_cast<std::size_t>(u)] || cov[static_cast<std::size_t>(v)]) continue;
    cov[static_cast<std::size_t>(u)] = cov[static_cast<std::size_t>(v)] = 1;
    cur.push_back(edges[i]);
    bool go = enumerate_matchings_rec(edges, i + 1, cur, cov, size_cap, budget, f);
    cur.pop_back();
    cov[static_cast<std::size_t>(u)] = cov[static_cast<std::size_t>(v)] = 0;
    if (!go) return false;
  }
  return true;
}

}  // namespace detail

/// Every matching of g (including the empty one) exactly once, by ordered
/// inclusion over the canonical edge order. size_cap < 0 means unbounded.
template <typename F>
void enumerate_matchings(const Graph& g, int size_cap, EnumBudget& budget, F f) {
  auto edges = g.edges();
  std::vector<Edge> cur;
  std::vector<char> cov(static_cast<std::size_t>(g.vertex_count()), 0);
  detail::enumerate_matchings_rec(edges, 0, cur, cov, size_cap, budget, f);
}

namespace detail {

// Branch on the lexicographically first edge with both endpoints uncovered:
// include it or delete it. A delete branch dies once neither endpoint can be
// covered by a later inclusion.
template <typename F>
bool enumerate_maximal_rec(const Graph& g, const std::vector<Edge>& edges,
                           std::vector<char>& deleted, std::vector<char>& cov,
                           std::vector<Edge>& cur, int size_cap,
                           EnumBudget& budget, F& f) {
  std::size_t pick = edges.size();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (deleted[i]) continue;
    const auto& [u, v] = edges[i];
    if (!cov[static_cast<std::size_t>(u)] && !cov[static_cast<std::size_t>(v)]) {
      pick = i;
      break;
    }
  }

  if (pick == edges.size()) {
    // no eligible edge: maximal iff every deleted edge has a covered endpoint
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (deleted[i] && !cov[static_cast<std::size_t>(edges[i].first)] &&
          !cov[static_cast<std::size_t>(edges[i].second)])
        return true;
    if (!budget.take()) return false;
    return f(static_cast<const std::vector<Edge>&>(cur));
  }

  const auto [u, v] = edges[pick];

  if (size_cap < 0 || static_cast<int>(cur.size()) < size_cap) {
    cov[static_cast<std::size_t>(u)] = cov[static_cast<std::size_t>(v)] = 1;
    cur.push_back(edges[pick]);
    deleted[pick] = 1;  // settled within this branch
    bool go = enumerate_maximal_rec(g, edges, deleted, cov, cur, size_cap, budget, f);
    deleted[pick] = 0;
    cur.pop_back();
    cov[static_cast<std::size_t>(u)] = cov[static_cast<std::size_t>(v)] = 0;
    if (!go) return false;
  } else {
    budget.truncated = true;  // inclusions above the cap were not explored
  }

  deleted[pick] = 1;
  bool viable = false;  // u or v still coverable by a later edge?
  for (std::size_t i = 0; i < edges.size() && !viable; ++i) {
    if (deleted[i]) continue;
    const auto& [a, b] = edges[i];
    if (cov[static_cast<std::size_t>(a)] || cov[static_cast<std::size_t>(b)]) continue;
    viable = (a == u || b == u || a == v || b == v);
  }
  bool go = true;
  if (viable)
    go = enumerate_maximal_rec(g, edges, deleted, cov, cur, size_cap, budget, f);
  deleted[pick] = 0;
  return go;
}

}  // namespace detail

/// Every maximal matching of g exactly once. size_cap prunes inclusion
/// branches that would exceed the cap (the capped run is marked truncated).
template <typename F>
void enumerate_maximal_matchings(const Graph& g, int size_cap, EnumBudget& budget, F f) {
  auto edges = g.edges();
  if (edges.empty()) {
    if (budget.take()) f(std::vector<Edge>{});
    return;
  }
  std::vector<char> deleted(edges.size(), 0);
  std::vector<char> cov(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Edge> cur;
  detail::enumerate_maximal_rec(g, edges, deleted, cov, cur, size_cap, budget, f);
}

inline std::vector<Matching> all_maximal_matchings(const Graph& g, int size_cap = -1) {
  std::vector<Matching> out;
  EnumBudget budget;
  enumerate_maximal_matchings(g, size_cap, budget, [&](const std::vector<Edge>& es) {
    out.push_back(Matching::from_edges(g, es));
    return true;
  });
  return out;
}

namespace detail {

// A matching M isolates v iff v is uncovered and N(v) is covered; it is a
// minimal such matching iff additionally every edge of M meets N(v).
template <typename F>
bool isolating_rec(const Graph& g, Vertex v, const std::vector<Vertex>& targets,
                   std::vector<char>& cov, std::vector<Edge>& cur,
                   EnumBudget& budget, F& f) {
  Vertex u = -1;
  for (Vertex t : targets)
    if (!cov[static_cast<std::size_t>(t)]) {
      u = t;
      break;
    }
  if (u < 0) {
    if (!budget.take()) return false;
    return f(static_cast<const std::vector<Edge>&>(cur));
  }
  for (Vertex w : g.neighbors(u)) {
    if (w == v || cov[static_cast<std::size_t>(w)]) continue;
    cov[static_cast<std::size_t>(u)] = cov[static_cast<std::size_t>(w)] = 1;
    cur.push_back(make_edge(u, w));
    bool go = isolating_rec(g, v, targets, cov, cur, budget, f);
    cur.pop_back();
    cov[static_cast<std::size_t>(u)] = cov[static_cast<std::size_t>(w)] = 0;
    if (!go) return false;
  }
  return true;
}

}  // namespace detail

/// Every minimal matching isolating v ({v} a component of g - V(M), no
/// proper subset isolates) exactly once.
template <typename F>
void minimal_isolating_matchings(const Graph& g, Vertex v, EnumBudget& budget, F f) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("minimal_isolating_matchings: vertex out of range");
  std::vector<Vertex> targets = g.neighbors(v);
  std::vector<char> cov(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Edge> cur;
  detail::isolating_rec(g, v, targets, cov, cur, budget, f);
}

inline std::vector<Matching> all_minimal_isolating_matchings(const Graph& g, Vertex v) {
  std::vector<Matching> out;
  EnumBudget budget;
  minimal_isolating_matchings(g, v, budget, [&](const std::vector<Edge>& es) {
    out.push_back(Matching::from_edges(g, es));
    return true;
  });
  return out;
}

}  // namespace matchkit
