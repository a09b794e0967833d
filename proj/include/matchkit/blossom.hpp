#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "matchkit/graph.hpp"
#include "matchkit/matching.hpp"

namespace matchkit {

namespace detail {

// Edmonds' blossom algorithm, the standard base-array contraction variant.
// O(V^3); plenty for the graph sizes this library targets.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g),
        n_(g.vertex_count()),
        match_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_), -1),
        base_(static_cast<std::size_t>(n_), 0),
        used_(static_cast<std::size_t>(n_), 0),
        in_blossom_(static_cast<std::size_t>(n_), 0) {}

  std::vector<Vertex> solve() {
    greedy_init();
    for (Vertex v = 0; v < n_; ++v)
      if (match_[static_cast<std::size_t>(v)] < 0) {
        Vertex w = find_augmenting(v);
        if (w >= 0) augment(w);
      }
    return match_;
  }

 private:
  void greedy_init() {
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[static_cast<std::size_t>(v)] >= 0) continue;
      for (Vertex w : g_.neighbors(v))
        if (match_[static_cast<std::size_t>(w)] < 0) {
          match_[static_cast<std::size_t>(v)] = w;
          match_[static_cast<std::size_t>(w)] = v;
          break;
        }
    }
  }

  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (;;) {
      a = base_[static_cast<std::size_t>(a)];
      seen[static_cast<std::size_t>(a)] = 1;
      if (match_[static_cast<std::size_t>(a)] < 0) break;
      a = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
    }
    for (;;) {
      b = base_[static_cast<std::size_t>(b)];
      if (seen[static_cast<std::size_t>(b)]) return b;
      b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[static_cast<std::size_t>(v)] != b) {
      Vertex mv = match_[static_cast<std::size_t>(v)];
      in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
      in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
      parent_[static_cast<std::size_t>(v)] = child;
      child = mv;
      v = parent_[static_cast<std::size_t>(mv)];
    }
  }

  Vertex find_augmenting(Vertex root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(used_.begin(), used_.end(), 0);
    std::iota(base_.begin(), base_.end(), 0);

    std::deque<Vertex> queue{root};
    used_[static_cast<std::size_t>(root)] = 1;

    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
            match_[static_cast<std::size_t>(v)] == to)
          continue;
        if (to == root ||
            (match_[static_cast<std::size_t>(to)] >= 0 &&
             parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] >= 0)) {
          // odd cycle: contract the blossom
          Vertex cur_base = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (Vertex i = 0; i < n_; ++i)
            if (in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
              base_[static_cast<std::size_t>(i)] = cur_base;
              if (!used_[static_cast<std::size_t>(i)]) {
                used_[static_cast<std::size_t>(i)] = 1;
                queue.push_back(i);
              }
            }
        } else if (parent_[static_cast<std::size_t>(to)] < 0) {
          parent_[static_cast<std::size_t>(to)] = v;
          if (match_[static_cast<std::size_t>(to)] < 0) return to;
          Vertex next = match_[static_cast<std::size_t>(to)];
          used_[static_cast<std::size_t>(next)] = 1;
          queue.push_back(next);
        }
      }
    }
    return -1;
  }

  void augment(Vertex v) {
    while (v >= 0) {
      Vertex pv = parent_[static_cast<std::size_t>(v)];
      Vertex next = match_[static_cast<std::size_t>(pv)];
      match_[static_cast<std::size_t>(v)] = pv;
      match_[static_cast<std::size_t>(pv)] = v;
      v = next;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> match_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

}  // namespace detail

inline std::vector<Vertex> maximum_matching_mates(const Graph& g) {
  return detail::BlossomMatcher(g).solve();
}

inline Matching maximum_matching(const Graph& g) {
  return Matching::from_mates(g, maximum_matching_mates(g));
}

/// nu(g), the maximum matching size.
inline int matching_number(const Graph& g) {
  auto mate = maximum_matching_mates(g);
  int covered = 0;
  for (Vertex v : mate)
    if (v >= 0) ++covered;
  return covered / 2;
}

/// n - 2 nu(g): vertices exposed by any maximum matching.
inline int deficiency(const Graph& g) {
  return g.vertex_count() - 2 * matching_number(g);
}

inline bool has_perfect_matching(const Graph& g) { return deficiency(g) == 0; }

/// A matching of g covering every vertex of `required`, if one exists.
///
/// Reduction: add a clique Z of size |V - required| (+1 to fix parity) joined
/// completely to V - required; the augmented graph has a perfect matching iff
/// g has a matching saturating `required`, and its restriction to g is one.
inline std::optional<Matching> saturating_matching(const Graph& g, const VertexSet& required) {
  const int n = g.vertex_count();
  for (Vertex v : required)
    if (v < 0 || v >= n)
      throw std::invalid_argument("saturating_matching: vertex out of range");
  if (required.empty()) return Matching();

  const int f = n - required.size();
  const int z = f + (required.size() % 2);
  std::vector<Edge> edges = g.edges();
  std::vector<Vertex> free_vertices;
  for (Vertex v = 0; v < n; ++v)
    if (!required.contains(v)) free_vertices.push_back(v);
  for (int i = 0; i < z; ++i) {
    for (int j = i + 1; j < z; ++j) edges.push_back({n + i, n + j});
    for (Vertex v : free_vertices) edges.push_back({v, n + i});
  }
  Graph aug = Graph::from_edges(n + z, edges);
  auto mate = maximum_matching_mates(aug);
  for (Vertex v = 0; v < n + z; ++v)
    if (mate[static_cast<std::size_t>(v)] < 0) return std::nullopt;

  std::vector<Edge> picked;
  for (Vertex v = 0; v < n; ++v) {
    Vertex w = mate[static_cast<std::size_t>(v)];
    if (w > v && w < n) picked.push_back({v, w});
  }
  Matching result = Matching::from_edges(g, std::move(picked));
  for (Vertex v : required)
    if (!result.covers(v))
      throw std::logic_error("saturating_matching: reduction failed to cover required vertex");
  return result;
}

}  // namespace matchkit
