#pragma once

#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "matchkit/bipartite.hpp"
#include "matchkit/graph.hpp"

namespace matchkit {

namespace detail {

// Unit-capacity max-flow on the vertex-split network (v_in -> v_out, cap 1;
// u_out -> v_in per edge). Augments one path at a time; stops at `stop_at`.
class VertexFlow {
 public:
  explicit VertexFlow(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  int max_vertex_disjoint_paths(Vertex s, Vertex t, int stop_at) {
    const int nodes = 2 * n_;
    head_.assign(static_cast<std::size_t>(nodes), -1);
    to_.clear();
    cap_.clear();
    next_.clear();
    for (Vertex v = 0; v < n_; ++v) add_arc(in(v), out(v), v == s || v == t ? 2 : 1);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : g_.neighbors(u)) add_arc(out(u), in(v), 1);

    int flow = 0;
    std::vector<int> prev_arc(static_cast<std::size_t>(nodes));
    while (flow < stop_at) {
      std::fill(prev_arc.begin(), prev_arc.end(), -2);
      std::deque<int> q{out(s)};
      prev_arc[static_cast<std::size_t>(out(s))] = -1;
      bool reached = false;
      while (!q.empty() && !reached) {
        int x = q.front();
        q.pop_front();
        for (int a = head_[static_cast<std::size_t>(x)]; a >= 0; a = next_[static_cast<std::size_t>(a)]) {
          if (cap_[static_cast<std::size_t>(a)] <= 0) continue;
          int y = to_[static_cast<std::size_t>(a)];
          if (prev_arc[static_cast<std::size_t>(y)] != -2) continue;
          prev_arc[static_cast<std::size_t>(y)] = a;
          if (y == in(t)) {
            reached = true;
            break;
          }
          q.push_back(y);
        }
      }
      if (!reached) break;
      for (int y = in(t); y != out(s);) {
        int a = prev_arc[static_cast<std::size_t>(y)];
        --cap_[static_cast<std::size_t>(a)];
        ++cap_[static_cast<std::size_t>(a ^ 1)];
        y = to_[static_cast<std::size_t>(a ^ 1)];
      }
      ++flow;
    }
    return flow;
  }

 private:
  int in(Vertex v) const { return 2 * v; }
  int out(Vertex v) const { return 2 * v + 1; }

  void add_arc(int a, int b, int c) {
    to_.push_back(b);
    cap_.push_back(c);
    next_.push_back(head_[static_cast<std::size_t>(a)]);
    head_[static_cast<std::size_t>(a)] = static_cast<int>(to_.size()) - 1;
    to_.push_back(a);
    cap_.push_back(0);
    next_.push_back(head_[static_cast<std::size_t>(b)]);
    head_[static_cast<std::size_t>(b)] = static_cast<int>(to_.size()) - 1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> head_, to_, cap_, next_;
};

}  // namespace detail

/// kappa(g) by Menger: minimum over s-t vertex-disjoint path counts. Pair
/// selection fixes a minimum-degree vertex s, scans its non-neighbors, then
/// repeats from each neighbor of s; some vertex of N[s] avoids a minimum cut,
/// so the scan meets one.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  if (is_complete(g)) return n - 1;
  if (!is_connected(g)) return 0;

  Vertex s = 0;
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(s)) s = v;

  int best = g.degree(s);
  detail::VertexFlow flow(g);
  auto probe = [&](Vertex a) {
    std::vector<char> adj(static_cast<std::size_t>(n), 0);
    adj[static_cast<std::size_t>(a)] = 1;
    for (Vertex w : g.neighbors(a)) adj[static_cast<std::size_t>(w)] = 1;
    for (Vertex t = 0; t < n; ++t)
      if (!adj[static_cast<std::size_t>(t)])
        best = std::min(best, flow.max_vertex_disjoint_paths(a, t, best));
  };
  probe(s);
  for (Vertex u : g.neighbors(s)) probe(u);
  return best;
}

/// A vertex cut with the components it separates, ordered by decreasing size
/// (ties by smallest member).
struct CutDecomposition {
  VertexSet S;
  std::vector<VertexSet> parts;
  int k = 0;
};

// components of g - S with original vertex ids
inline std::vector<VertexSet> components_without(const Graph& g, const VertexSet& S) {
  InducedSubgraph rest = induced_subgraph(g, set_difference(VertexSet::range(g.vertex_count()), S));
  std::vector<VertexSet> parts;
  for (const VertexSet& c : components(rest.graph)) {
    std::vector<Vertex> orig;
    for (Vertex v : c) orig.push_back(rest.to_parent[static_cast<std::size_t>(v)]);
    parts.emplace_back(std::move(orig));
  }
  std::stable_sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a[0] < b[0];
  });
  return parts;
}

inline CutDecomposition make_cut_decomposition(const Graph& g, const VertexSet& S) {
  CutDecomposition cd;
  cd.S = S;
  cd.k = S.size();
  cd.parts = components_without(g, S);
  return cd;
}

/// All vertex cuts of size kappa(g), as decompositions, in lexicographic
/// order of the cut set. Complete graphs have no cut.
template <typename F>
void for_each_minimum_cut(const Graph& g, F f) {
  if (is_complete(g)) throw std::domain_error("no vertex cut exists");
  const int n = g.vertex_count();
  const int k = vertex_connectivity(g);

  std::vector<Vertex> pick(static_cast<std::size_t>(k));
  std::function<bool(int, Vertex)> rec = [&](int depth, Vertex from) -> bool {
    if (depth == k) {
      VertexSet S{std::vector<Vertex>(pick)};
      auto parts = components_without(g, S);
      if (parts.size() < 2) return true;
      CutDecomposition cd;
      cd.S = S;
      cd.k = k;
      cd.parts = std::move(parts);
      return f(cd);
    }
    for (Vertex v = from; v < n - (k - depth - 1); ++v) {
      pick[static_cast<std::size_t>(depth)] = v;
      if (!rec(depth + 1, v + 1)) return false;
    }
    return true;
  };
  rec(0, 0);
}

inline std::vector<CutDecomposition> minimum_vertex_cuts(const Graph& g,
                                                         std::optional<int> cap = std::nullopt) {
  std::vector<CutDecomposition> out;
  for_each_minimum_cut(g, [&](const CutDecomposition& cd) {
    out.push_back(cd);
    return !cap || static_cast<int>(out.size()) < *cap;
  });
  return out;
}

/// Exact independence number with a witness set.
struct IndependenceCertificate {
  int alpha = 0;
  VertexSet witness;
};

namespace detail {

// Branch and bound maximum clique with a greedy coloring bound (run on the
// complement to get maximum independent sets). Word-blocked bitsets, any n.
class MaxClique {
 public:
  explicit MaxClique(const std::vector<std::vector<std::uint64_t>>& adj, int n)
      : adj_(adj), n_(n), words_((n + 63) / 64) {}

  std::pair<int, std::vector<int>> solve() {
    std::vector<std::uint64_t> all(words_, 0);
    for (int v = 0; v < n_; ++v) all[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
    std::vector<int> cur;
    expand(all, cur);
    return {best_, best_set_};
  }

 private:
  static bool test(const std::vector<std::uint64_t>& s, int v) {
    return (s[static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1;
  }
  static void clear(std::vector<std::uint64_t>& s, int v) {
    s[static_cast<std::size_t>(v / 64)] &= ~(std::uint64_t{1} << (v % 64));
  }
  bool empty(const std::vector<std::uint64_t>& s) const {
    for (std::uint64_t w : s)
      if (w) return false;
    return true;
  }
  int first(const std::vector<std::uint64_t>& s) const {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i]) return static_cast<int>(i) * 64 + __builtin_ctzll(s[i]);
    return -1;
  }

  void expand(const std::vector<std::uint64_t>& candidates, std::vector<int>& cur) {
    // greedy coloring: vertices listed in nondecreasing color
    std::vector<std::pair<int, int>> order;  // (vertex, color)
    {
      std::vector<std::uint64_t> left = candidates;
      int color = 0;
      while (!empty(left)) {
        ++color;
        std::vector<std::uint64_t> cls = left;
        while (!empty(cls)) {
          int v = first(cls);
          order.push_back({v, color});
          clear(cls, v);
          clear(left, v);
          for (std::size_t i = 0; i < cls.size(); ++i)
            cls[i] &= ~adj_[static_cast<std::size_t>(v)][i];
        }
      }
    }
    std::vector<std::uint64_t> pool = candidates;
    for (std::size_t idx = order.size(); idx-- > 0;) {
      auto [v, color] = order[idx];
      if (static_cast<int>(cur.size()) + color <= best_) return;
      cur.push_back(v);
      std::vector<std::uint64_t> next(words_);
      for (std::size_t i = 0; i < next.size(); ++i)
        next[i] = pool[i] & adj_[static_cast<std::size_t>(v)][i];
      clear(next, v);
      if (empty(next)) {
        if (static_cast<int>(cur.size()) > best_) {
          best_ = static_cast<int>(cur.size());
          best_set_ = cur;
        }
      } else {
        expand(next, cur);
      }
      cur.pop_back();
      clear(pool, v);
    }
  }

  const std::vector<std::vector<std::uint64_t>>& adj_;
  int n_;
  std::size_t words_;
  int best_ = 0;
  std::vector<int> best_set_;
};

}  // namespace detail

inline IndependenceCertificate independence_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {0, {}};
  const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
  // complement adjacency: cliques there are independent sets here
  std::vector<std::vector<std::uint64_t>> comp(static_cast<std::size_t>(n),
                                               std::vector<std::uint64_t>(words, 0));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && !g.has_edge(u, v))
        comp[static_cast<std::size_t>(u)][static_cast<std::size_t>(v / 64)] |=
            std::uint64_t{1} << (v % 64);
  auto [alpha, witness] = detail::MaxClique(comp, n).solve();
  IndependenceCertificate cert{alpha, VertexSet(std::vector<Vertex>(witness.begin(), witness.end()))};
  for (int i = 0; i < cert.witness.size(); ++i)
    for (int j = i + 1; j < cert.witness.size(); ++j)
      if (g.has_edge(cert.witness[i], cert.witness[j]))
        throw std::logic_error("independence_number: witness is not independent");
  return cert;
}

/// Maximum matching between H and X (disjoint), the workhorse behind the
/// cut-to-component independent edge checks.
inline Matching independent_edges_between(const Graph& g, const VertexSet& H, const VertexSet& X) {
  if (!set_intersection(H, X).empty())
    throw std::invalid_argument("independent_edges_between: sets are not disjoint");
  return bipartite_max_matching(g, H, X).matching;
}

}  // namespace matchkit
