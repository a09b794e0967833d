#pragma once

#include <map>
#include <string>
#include <vector>

#include "matchkit/graph.hpp"

namespace matchkit {

enum class Family {
  complete,
  complete_bipartite,
  odd_cycle,
  gk_tight,
  g_mn,
  small_component_m1,
  small_component_m2,
  favaron_cutvertex,
  kcut_bipartite_case,
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::odd_cycle: return "odd_cycle";
    case Family::gk_tight: return "gk_tight";
    case Family::g_mn: return "g_mn";
    case Family::small_component_m1: return "small_component_m1";
    case Family::small_component_m2: return "small_component_m2";
    case Family::favaron_cutvertex: return "favaron_cutvertex";
    case Family::kcut_bipartite_case: return "kcut_bipartite_case";
  }
  return "unknown";
}

inline Family family_from_name(const std::string& name) {
  for (Family f : {Family::complete, Family::complete_bipartite, Family::odd_cycle,
                   Family::gk_tight, Family::g_mn, Family::small_component_m1,
                   Family::small_component_m2, Family::favaron_cutvertex,
                   Family::kcut_bipartite_case})
    if (name == family_name(f)) return f;
  if (name == "Gk") return Family::gk_tight;
  if (name == "Gmn") return Family::g_mn;
  throw std::invalid_argument("unknown family: " + name);
}

struct FamilySpec {
  Family family;
  std::vector<int> params;
};

/// A constructed graph with its named role sets (S, C, D, ...). Vertex
/// numbering per family is fixed: S first, then C, then D.
struct LabeledGraph {
  Graph graph;
  std::map<std::string, VertexSet> roles;
  std::string name;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace detail

/// Independent cut S of size k, independent C of size k-1, D = K_2; all
/// S x (C u D) edges plus the D edge. 2k+1 vertices; G - S has k components.
inline LabeledGraph build_gk_tight(int k) {
  detail::require(k >= 3, "gk_tight: k must be >= 3");
  const int s0 = 0, c0 = k, d0 = 2 * k - 1;
  std::vector<Edge> edges;
  for (int s = s0; s < c0; ++s)
    for (int v = c0; v < 2 * k + 1; ++v) edges.push_back({s, v});
  edges.push_back({d0, d0 + 1});
  LabeledGraph out;
  out.graph = Graph::from_edges(2 * k + 1, edges);
  out.roles["S"] = VertexSet::range(k);
  out.roles["C"] = VertexSet(std::vector<Vertex>{});
  for (int v = c0; v < d0; ++v) out.roles["C"].insert(v);
  out.roles["D"] = VertexSet{d0, d0 + 1};
  out.name = "gk_tight(" + std::to_string(k) + ")";
  return out;
}

/// Independent S of size 3, C = K_m, D = K_n, complete join S x (C u D).
inline LabeledGraph build_g_mn(int m, int n) {
  detail::require(m >= 1 && n >= 1, "g_mn: m and n must be positive");
  detail::require(m % 2 == 1 && n % 2 == 1, "g_mn: m and n must be odd");
  detail::require(m + n >= 4, "g_mn: m + n must be at least 4");
  const int c0 = 3, d0 = 3 + m, total = 3 + m + n;
  std::vector<Edge> edges;
  for (int s = 0; s < 3; ++s)
    for (int v = c0; v < total; ++v) edges.push_back({s, v});
  for (int u = c0; u < d0; ++u)
    for (int v = u + 1; v < d0; ++v) edges.push_back({u, v});
  for (int u = d0; u < total; ++u)
    for (int v = u + 1; v < total; ++v) edges.push_back({u, v});
  LabeledGraph out;
  out.graph = Graph::from_edges(total, edges);
  out.roles["S"] = VertexSet{0, 1, 2};
  out.roles["C"] = VertexSet(std::vector<Vertex>{});
  for (int v = c0; v < d0; ++v) out.roles["C"].insert(v);
  out.roles["D"] = VertexSet(std::vector<Vertex>{});
  for (int v = d0; v < total; ++v) out.roles["D"].insert(v);
  out.name = "g_mn(" + std::to_string(m) + "," + std::to_string(n) + ")";
  return out;
}

/// K_{l,l} (l = max(n,k)) plus an apex joined to a k-subset S that meets both
/// partite sets: ceil(k/2) vertices from side 0 and the rest from side 1,
/// lowest indices. The apex is the size-1 component of G - S.
inline LabeledGraph build_small_component_m1(int n, int k) {
  detail::require(k >= 3, "small_component_m1: k must be >= 3");
  detail::require(n >= 1, "small_component_m1: n must be positive");
  const int l = std::max(n, k);
  const int a = (k + 1) / 2, b = k - a;  // S split across the two sides
  // vertices: S side0 [0,a), S side1 [a,k), C side0 [k, k+l-a), C side1 rest, apex last
  const int c0 = k, c0_end = k + (l - a), c1_end = c0_end + (l - b), apex = 2 * l;
  auto side_of = [&](int v) {
    if (v < a) return 0;
    if (v < k) return 1;
    if (v < c0_end) return 0;
    return 1;
  };
  std::vector<Edge> edges;
  for (int u = 0; u < 2 * l; ++u)
    for (int v = u + 1; v < 2 * l; ++v)
      if (side_of(u) != side_of(v)) edges.push_back({u, v});
  for (int s = 0; s < k; ++s) edges.push_back({s, apex});
  LabeledGraph out;
  out.graph = Graph::from_edges(2 * l + 1, edges);
  out.roles["S"] = VertexSet::range(k);
  out.roles["C"] = VertexSet(std::vector<Vertex>{});
  for (int v = c0; v < c1_end; ++v) out.roles["C"].insert(v);
  out.roles["D"] = VertexSet{apex};
  out.name = "small_component_m1(" + std::to_string(n) + "," + std::to_string(k) + ")";
  return out;
}

/// K_{l,l+1} (l = max(n,k)) plus a K_2 joined to k vertices of the larger
/// partite set. The K_2 is the size-2 component of G - S.
inline LabeledGraph build_small_component_m2(int n, int k) {
  detail::require(k >= 3, "small_component_m2: k must be >= 3");
  detail::require(n >= 1, "small_component_m2: n must be positive");
  const int l = std::max(n, k);
  // vertices: S [0,k) in the larger side, rest of larger side [k, l+1),
  // smaller side [l+1, 2l+1), D = {2l+1, 2l+2}
  const int big_end = l + 1, small_end = 2 * l + 1, d0 = 2 * l + 1;
  std::vector<Edge> edges;
  for (int u = 0; u < big_end; ++u)
    for (int v = big_end; v < small_end; ++v) edges.push_back({u, v});
  for (int s = 0; s < k; ++s) {
    edges.push_back({s, d0});
    edges.push_back({s, d0 + 1});
  }
  edges.push_back({d0, d0 + 1});
  LabeledGraph out;
  out.graph = Graph::from_edges(2 * l + 3, edges);
  out.roles["S"] = VertexSet::range(k);
  out.roles["C"] = VertexSet(std::vector<Vertex>{});
  for (int v = k; v < small_end; ++v) out.roles["C"].insert(v);
  out.roles["D"] = VertexSet{d0, d0 + 1};
  out.name = "small_component_m2(" + std::to_string(n) + "," + std::to_string(k) + ")";
  return out;
}

/// One cut-vertex joined to every vertex of each component; components are
/// even complete graphs, so each is randomly matchable and contains two
/// adjacent neighbors of the cut-vertex.
inline LabeledGraph build_favaron_cutvertex(const std::vector<int>& sizes) {
  detail::require(sizes.size() >= 2, "favaron_cutvertex: need at least two components");
  int total = 1;
  for (int s : sizes) {
    detail::require(s >= 2 && s % 2 == 0, "favaron_cutvertex: component sizes must be even and >= 2");
    total += s;
  }
  std::vector<Edge> edges;
  int base = 1;
  for (int s : sizes) {
    for (int u = base; u < base + s; ++u) {
      edges.push_back({0, u});
      for (int v = u + 1; v < base + s; ++v) edges.push_back({u, v});
    }
    base += s;
  }
  LabeledGraph out;
  out.graph = Graph::from_edges(total, edges);
  out.roles["S"] = VertexSet{0};
  out.name = "favaron_cutvertex(";
  for (std::size_t i = 0; i < sizes.size(); ++i)
    out.name += (i ? "," : "") + std::to_string(sizes[i]);
  out.name += ")";
  return out;
}

/// The independent-cut shape: C u S as K_{n,n+1} minus a matching of
/// removed S-to-(X u U) pairs, plus a K_2 component D joined to all of S.
/// Sides: S u W is the larger partite set (W = rest of it), X u U the
/// smaller (X = first k of it). Probing fixture; instances need not be EFC.
inline LabeledGraph kcut_caseB_shape(int n, int k, const std::vector<std::pair<int, int>>& removed) {
  detail::require(n >= 1, "kcut_caseB_shape: n must be positive");
  detail::require(k >= 1, "kcut_caseB_shape: k must be positive");
  detail::require(k <= n, "kcut_caseB_shape: k must be at most n");
  for (std::size_t i = 0; i < removed.size(); ++i) {
    detail::require(removed[i].first >= 0 && removed[i].first < k,
                    "kcut_caseB_shape: removed pair cut index out of range");
    detail::require(removed[i].second >= 0 && removed[i].second < n,
                    "kcut_caseB_shape: removed pair component index out of range");
    for (std::size_t j = i + 1; j < removed.size(); ++j)
      detail::require(removed[i].first != removed[j].first &&
                          removed[i].second != removed[j].second,
                      "kcut_caseB_shape: removed pairs repeat a coordinate");
  }
  // vertices: S [0,k), W [k, n+1), X u U [n+1, 2n+1), D = {2n+1, 2n+2}
  const int big_end = n + 1, small0 = n + 1, small_end = 2 * n + 1, d0 = 2 * n + 1;
  std::vector<char> drop(static_cast<std::size_t>(k) * static_cast<std::size_t>(n), 0);
  for (const auto& [s, x] : removed) drop[static_cast<std::size_t>(s) * n + x] = 1;
  std::vector<Edge> edges;
  for (int u = 0; u < big_end; ++u)
    for (int v = small0; v < small_end; ++v) {
      if (u < k && drop[static_cast<std::size_t>(u) * n + (v - small0)]) continue;
      edges.push_back({u, v});
    }
  for (int s = 0; s < k; ++s) {
    edges.push_back({s, d0});
    edges.push_back({s, d0 + 1});
  }
  edges.push_back({d0, d0 + 1});
  LabeledGraph out;
  out.graph = Graph::from_edges(2 * n + 3, edges);
  out.roles["S"] = VertexSet::range(k);
  out.roles["C"] = VertexSet(std::vector<Vertex>{});
  for (int v = k; v < big_end; ++v) out.roles["C"].insert(v);
  for (int v = small0; v < small_end; ++v) out.roles["C"].insert(v);
  out.roles["D"] = VertexSet{d0, d0 + 1};
  out.roles["X"] = VertexSet(std::vector<Vertex>{});
  for (int v = small0; v < small0 + k; ++v) out.roles["X"].insert(v);
  out.name = "kcut_caseB(" + std::to_string(n) + "," + std::to_string(k) + ",removed=" +
             std::to_string(removed.size()) + ")";
  return out;
}

inline LabeledGraph build(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::complete: {
      detail::require(p.size() == 1 && p[0] >= 0, "complete: one nonnegative parameter");
      LabeledGraph out;
      out.graph = Graph::complete(p[0]);
      out.name = "complete(" + std::to_string(p[0]) + ")";
      return out;
    }
    case Family::complete_bipartite: {
      detail::require(p.size() == 2 && p[0] >= 0 && p[1] >= 0,
                      "complete_bipartite: two nonnegative parameters");
      LabeledGraph out;
      out.graph = Graph::complete_bipartite(p[0], p[1]);
      out.roles["A"] = VertexSet::range(p[0]);
      out.roles["B"] = VertexSet(std::vector<Vertex>{});
      for (int v = p[0]; v < p[0] + p[1]; ++v) out.roles["B"].insert(v);
      out.name = "complete_bipartite(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
      return out;
    }
    case Family::odd_cycle: {
      detail::require(p.size() == 1 && p[0] >= 3 && p[0] % 2 == 1,
                      "odd_cycle: one odd parameter >= 3");
      LabeledGraph out;
      out.graph = Graph::cycle(p[0]);
      out.name = "odd_cycle(" + std::to_string(p[0]) + ")";
      return out;
    }
    case Family::gk_tight:
      detail::require(p.size() == 1, "gk_tight: one parameter k");
      return build_gk_tight(p[0]);
    case Family::g_mn:
      detail::require(p.size() == 2, "g_mn: two parameters m, n");
      return build_g_mn(p[0], p[1]);
    case Family::small_component_m1:
      detail::require(p.size() == 2, "small_component_m1: two parameters n, k");
      return build_small_component_m1(p[0], p[1]);
    case Family::small_component_m2:
      detail::require(p.size() == 2, "small_component_m2: two parameters n, k");
      return build_small_component_m2(p[0], p[1]);
    case Family::favaron_cutvertex:
      return build_favaron_cutvertex(p);
    case Family::kcut_bipartite_case: {
      detail::require(p.size() >= 2 && p.size() % 2 == 0,
                      "kcut_bipartite_case: parameters n, k, then removed pairs");
      std::vector<std::pair<int, int>> removed;
      for (std::size_t i = 2; i + 1 < p.size(); i += 2) removed.push_back({p[i], p[i + 1]});
      return kcut_caseB_shape(p[0], p[1], removed);
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace matchkit
