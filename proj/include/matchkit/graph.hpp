#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matchkit {

using Vertex = int;

/// Unordered edge, normalized so that first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) {
  if (u == v)
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  return u < v ? Edge{u, v} : Edge{v, u};
}

/// Sorted, duplicate-free set of vertex ids. Ids always refer to one fixed
/// graph; relabelings between graphs are carried as explicit maps.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}

  static VertexSet range(int n) {
    std::vector<Vertex> v(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(v.begin(), v.end(), 0);
    VertexSet s;
    s.members_ = std::move(v);
    return s;
  }

  static VertexSet from_mask(std::uint64_t mask) {
    std::vector<Vertex> v;
    for (; mask; mask &= mask - 1)
      v.push_back(static_cast<Vertex>(__builtin_ctzll(mask)));
    VertexSet s;
    s.members_ = std::move(v);
    return s;
  }

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }

  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  Vertex operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  void insert(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
  }

  void erase(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it != members_.end() && *it == v) members_.erase(it);
  }

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (Vertex v : members_) {
      if (v < 0 || v >= 64) throw std::domain_error("VertexSet::mask: id out of word range");
      m |= std::uint64_t{1} << v;
    }
    return m;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Vertex> members_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are sorted and duplicate-free; there are no self-loops.
/// Derived graphs ("G+e", induced subgraphs) are new objects. For n <= 64 a
/// word-parallel adjacency mask per vertex backs the fast paths; all
/// operations also work through the general adjacency-list path.
class Graph {
 public:
  Graph() = default;

  static Graph empty(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.resize(static_cast<std::size_t>(n));
    if (n <= 64) g.mask_.assign(static_cast<std::size_t>(n), 0);
    return g;
  }

  static Graph from_edges(int n, const std::vector<Edge>& edges) {
    Graph g = empty(n);
    for (const auto& [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                    "-" + std::to_string(v));
      if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      g.adj_[static_cast<std::size_t>(u)].push_back(v);
      g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    g.finish();
    return g;
  }

  static Graph complete(int n) {
    Graph g = empty(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (v != u) g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.finish();
    return g;
  }

  /// K_{a,b} with side 0 = vertices [0,a) and side 1 = [a,a+b).
  static Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative side size");
    Graph g = empty(a + b);
    for (Vertex u = 0; u < a; ++u)
      for (Vertex v = a; v < a + b; ++v) {
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
      }
    g.finish();
    return g;
  }

  static Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v) e.push_back(make_edge(v, (v + 1) % n));
    return from_edges(n, e);
  }

  static Graph path(int n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    return from_edges(n, e);
  }

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }

  const std::vector<Vertex>& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    if (!mask_.empty())
      return (mask_[static_cast<std::size_t>(u)] >> v) & 1;
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool has_masks() const { return !mask_.empty() || n_ == 0; }

  std::uint64_t neighbor_mask(Vertex v) const {
    check_vertex(v);
    if (mask_.empty()) throw std::domain_error("neighbor_mask: graph exceeds word size");
    return mask_[static_cast<std::size_t>(v)];
  }

  std::uint64_t full_mask() const {
    if (n_ > 64) throw std::domain_error("full_mask: graph exceeds word size");
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  /// Edges in lexicographic order; this is the canonical edge order used by
  /// every enumeration in the library.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adj_[static_cast<std::size_t>(u)])
        if (v > u) out.push_back({u, v});
    return out;
  }

  Graph plus_edge(Vertex u, Vertex v) const {
    Edge e = make_edge(u, v);
    check_vertex(e.first);
    check_vertex(e.second);
    if (has_edge(e.first, e.second))
      throw std::invalid_argument("edge already present");
    auto es = edges();
    es.push_back(e);
    return from_edges(n_, es);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void finish() {
    std::size_t deg_sum = 0;
    for (const auto& nb : adj_) deg_sum += nb.size();
    m_ = deg_sum / 2;
    if (n_ <= 64) {
      mask_.assign(static_cast<std::size_t>(n_), 0);
      for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[static_cast<std::size_t>(u)])
          mask_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    } else {
      mask_.clear();
    }
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> mask_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // new id -> original id (sorted, a bijection)
  std::vector<Vertex> from_parent;  // original id -> new id, or -1 if dropped
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.from_parent.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex v : keep) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced_subgraph: vertex id out of range: " +
                                  std::to_string(v));
    out.from_parent[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Edge> es;
  for (Vertex v : keep)
    for (Vertex w : g.neighbors(v))
      if (w > v && out.from_parent[static_cast<std::size_t>(w)] >= 0)
        es.push_back({out.from_parent[static_cast<std::size_t>(v)],
                      out.from_parent[static_cast<std::size_t>(w)]});
  out.graph = Graph::from_edges(keep.size(), es);
  return out;
}

inline Graph induced(const Graph& g, const VertexSet& keep) {
  return induced_subgraph(g, keep).graph;
}

inline Graph minus_vertices(const Graph& g, const VertexSet& remove) {
  return induced(g, set_difference(VertexSet::range(g.vertex_count()), remove));
}

/// Connected components as vertex sets, sorted by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack, comp;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    comp.clear();
    stack.assign(1, s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
    out.emplace_back(comp);
  }
  return out;
}

/// Graphs on 0 or 1 vertices count as connected.
inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// Non-adjacent unordered pairs of distinct vertices, lexicographic.
inline std::vector<Edge> complement_edges(const Graph& g) {
  std::vector<Edge> out;
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.push_back({u, v});
  return out;
}

inline Graph complement(const Graph& g) {
  return Graph::from_edges(g.vertex_count(), complement_edges(g));
}

inline bool is_complete(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n - 1) / 2;
}

/// Two-coloring; empty result if an odd cycle exists. Side 0 holds the
/// smallest vertex of each component.
inline bool bipartition(const Graph& g, VertexSet& side0, VertexSet& side1) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    stack.assign(1, s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (color[static_cast<std::size_t>(w)] < 0) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  std::vector<Vertex> a, b;
  for (Vertex v = 0; v < n; ++v)
    (color[static_cast<std::size_t>(v)] == 0 ? a : b).push_back(v);
  side0 = VertexSet(std::move(a));
  side1 = VertexSet(std::move(b));
  return true;
}

inline bool is_bipartite(const Graph& g) {
  VertexSet a, b;
  return bipartition(g, a, b);
}

/// Complete bipartite with the given side sizes, in either order.
inline bool is_complete_bipartite_sizes(const Graph& g, int a, int b) {
  VertexSet s0, s1;
  if (!bipartition(g, s0, s1)) return false;
  if (g.edge_count() != static_cast<std::size_t>(s0.size()) * static_cast<std::size_t>(s1.size()))
    return false;
  // the 2-coloring above is per-component; edge count forces one component
  // except for empty sides
  if (!is_connected(g) && g.vertex_count() > 1) return false;
  return (s0.size() == a && s1.size() == b) || (s0.size() == b && s1.size() == a);
}

// ---- subset (bitmask) helpers: the fast path for n <= 64 ------------------

inline int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

/// Connected components of the subgraph induced on `subset`.
inline std::vector<std::uint64_t> component_masks(const Graph& g, std::uint64_t subset) {
  std::vector<std::uint64_t> out;
  std::uint64_t todo = subset;
  while (todo) {
    std::uint64_t comp = todo & (~todo + 1);  // lowest set bit
    for (;;) {
      std::uint64_t grow = 0;
      for (std::uint64_t c = comp; c; c &= c - 1)
        grow |= g.neighbor_mask(static_cast<Vertex>(__builtin_ctzll(c))) & subset;
      grow |= comp;
      if (grow == comp) break;
      comp = grow;
    }
    out.push_back(comp);
    todo &= ~comp;
  }
  return out;
}

inline bool subset_connected(const Graph& g, std::uint64_t subset) {
  if (subset == 0) return true;
  std::uint64_t comp = subset & (~subset + 1);
  for (;;) {
    std::uint64_t grow = comp;
    for (std::uint64_t c = comp; c; c &= c - 1)
      grow |= g.neighbor_mask(static_cast<Vertex>(__builtin_ctzll(c))) & subset;
    if (grow == comp) break;
    comp = grow;
  }
  return comp == subset;
}

inline bool subset_is_complete(const Graph& g, std::uint64_t subset) {
  for (std::uint64_t c = subset; c; c &= c - 1) {
    Vertex v = static_cast<Vertex>(__builtin_ctzll(c));
    std::uint64_t want = subset & ~(std::uint64_t{1} << v);
    if ((g.neighbor_mask(v) & want) != want) return false;
  }
  return true;
}

}  // namespace matchkit
