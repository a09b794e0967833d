#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "matchkit/graph.hpp"
#include "matchkit/io.hpp"

namespace matchkit {

/// All labeled graphs on n vertices (2^C(n,2) of them), edge masks in
/// increasing order. Callback returns false to stop.
template <typename F>
void for_each_labeled_graph(int n, F f) {
  if (n < 0 || n > 10) throw std::invalid_argument("labeled enumeration supports n <= 10");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) edges.push_back(pairs[i]);
    if (!f(Graph::from_edges(n, edges))) return;
  }
}

namespace detail {

// Lexicographically smallest upper-triangle bit string over all vertex
// relabelings, found by positional DFS with prefix pruning. Column i of the
// triangle is the i-bit word of adjacencies to already-placed vertices; a
// committed improvement resets all later columns to the sentinel.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.vertex_count()) {
    if (n_ > 64) throw std::invalid_argument("canonical_form supports n <= 64");
  }

  std::vector<Vertex> best_order() {
    best_cols_.assign(static_cast<std::size_t>(n_), kSentinel);
    best_perm_.assign(static_cast<std::size_t>(n_), -1);
    perm_.clear();
    used_ = 0;
    dfs();
    return best_perm_;
  }

 private:
  static constexpr std::uint64_t kSentinel = ~std::uint64_t{0};

  void dfs() {
    const int i = static_cast<int>(perm_.size());
    if (i == n_) {
      best_perm_ = perm_;
      return;
    }
    std::vector<std::pair<std::uint64_t, Vertex>> cand;
    for (Vertex w = 0; w < n_; ++w) {
      if ((used_ >> w) & 1) continue;
      std::uint64_t col = 0;
      for (int j = 0; j < i; ++j)
        col = (col << 1) | (g_.has_edge(perm_[static_cast<std::size_t>(j)], w) ? 1 : 0);
      cand.push_back({col, w});
    }
    std::sort(cand.begin(), cand.end());
    for (const auto& [col, w] : cand) {
      if (col > best_cols_[static_cast<std::size_t>(i)]) break;
      if (col < best_cols_[static_cast<std::size_t>(i)]) {
        best_cols_[static_cast<std::size_t>(i)] = col;
        for (int j = i + 1; j < n_; ++j) best_cols_[static_cast<std::size_t>(j)] = kSentinel;
      }
      perm_.push_back(w);
      used_ |= std::uint64_t{1} << w;
      dfs();
      used_ &= ~(std::uint64_t{1} << w);
      perm_.pop_back();
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> best_cols_;
  std::vector<Vertex> best_perm_, perm_;
  std::uint64_t used_ = 0;
};

}  // namespace detail

/// Isomorphism-canonical relabeling of g (n <= 64).
inline Graph canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  auto order = detail::Canonicalizer(g).best_order();  // position -> original
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.has_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]))
        edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

inline std::string canonical_graph6(const Graph& g) { return emit_graph6(canonical_form(g)); }

/// All graphs on n vertices up to isomorphism, grown one vertex at a time
/// with canonical deduplication at each level. Sorted by graph6 encoding of
/// the canonical form.
inline std::vector<Graph> nonisomorphic_graphs(int n, bool connected_only = false) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::set<std::string> level{emit_graph6(Graph::empty(0))};
  for (int k = 1; k <= n; ++k) {
    std::set<std::string> next;
    for (const std::string& code : level) {
      Graph base = parse_graph6(code);
      auto base_edges = base.edges();
      const std::uint64_t subsets = std::uint64_t{1} << (k - 1);
      for (std::uint64_t nb = 0; nb < subsets; ++nb) {
        std::vector<Edge> edges = base_edges;
        for (int v = 0; v < k - 1; ++v)
          if ((nb >> v) & 1) edges.push_back({v, k - 1});
        next.insert(canonical_graph6(Graph::from_edges(k, edges)));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const std::string& code : level) {
    Graph g = parse_graph6(code);
    if (!connected_only || is_connected(g)) out.push_back(g);
  }
  return out;
}

}  // namespace matchkit
