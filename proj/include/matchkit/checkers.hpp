#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "matchkit/analysis.hpp"
#include "matchkit/bipartite.hpp"
#include "matchkit/constructions.hpp"
#include "matchkit/verdict.hpp"

namespace matchkit {

/// Budgets for the enumeration inner loops. Checks on graphs up to
/// `exhaustive_limit` vertices are exhaustive; larger graphs get an item cap
/// and the verdict is marked bounded when the cap bites.
struct HarnessOptions {
  int exhaustive_limit = 13;
  std::size_t large_cap = 200000;
  int matching_size_cap = -1;  // forwarded to the all-matchings checker
  std::optional<std::chrono::milliseconds> budget_ms;  // wall-clock cap per enumeration

  std::size_t cap_for(int n) const {
    return n <= exhaustive_limit ? static_cast<std::size_t>(-1) : large_cap;
  }
  EnumBudget make_budget(int n) const {
    EnumBudget b{cap_for(n)};
    if (budget_ms) b.deadline = std::chrono::steady_clock::now() + *budget_ms;
    return b;
  }
};

namespace detail {

inline Verdict not_applicable(Statement s, const std::string& hypothesis) {
  Verdict v{s, Status::not_applicable, Json::object()};
  v.certificate["hypothesis"] = hypothesis;
  return v;
}

inline void require_word_size(const Graph& g) {
  if (g.vertex_count() > 64)
    throw std::domain_error("verification suite supports at most 64 vertices");
}

/// First failed hypothesis of "2-connected equimatchable factor-critical",
/// or empty if all hold.
inline std::string efc_hypothesis_gap(Analysis& a, int min_kappa) {
  if (a.kappa() < min_kappa)
    return "kappa = " + std::to_string(a.kappa()) + " < " + std::to_string(min_kappa);
  if (!a.equimatchable().equimatchable) return "not equimatchable";
  if (!a.factor_critical()) return "not factor-critical";
  return "";
}

inline Json cut_json(const CutDecomposition& cd) {
  Json j;
  j["S"] = vertex_set_json(cd.S);
  j["k"] = cd.k;
  Json parts = Json::array();
  for (const auto& p : cd.parts) parts.push_back(vertex_set_json(p));
  j["parts"] = parts;
  return j;
}

inline Json edges_json(const std::vector<Edge>& es) {
  Json a = Json::array();
  for (const auto& [u, v] : es) a.push_back(std::to_string(u) + "-" + std::to_string(v));
  return a;
}

// matchings between S and component mask `cmask` covering every vertex of S
template <typename F>
bool saturating_cross_rec(const Graph& g, const VertexSet& S, std::size_t i,
                          std::uint64_t cmask, std::uint64_t used, std::vector<Edge>& cur,
                          EnumBudget& budget, F& f) {
  if (i == static_cast<std::size_t>(S.size())) {
    if (!budget.take()) return false;
    return f(static_cast<const std::vector<Edge>&>(cur));
  }
  Vertex s = S[static_cast<int>(i)];
  for (Vertex w : g.neighbors(s)) {
    std::uint64_t bit = std::uint64_t{1} << w;
    if (!(cmask & bit) || (used & bit)) continue;
    cur.push_back(make_edge(s, w));
    bool go = saturating_cross_rec(g, S, i + 1, cmask, used | bit, cur, budget, f);
    cur.pop_back();
    if (!go) return false;
  }
  return true;
}

template <typename F>
void enumerate_saturating_cross(const Graph& g, const VertexSet& S, std::uint64_t cmask,
                                EnumBudget& budget, F f) {
  std::vector<Edge> cur;
  saturating_cross_rec(g, S, 0, cmask, 0, cur, budget, f);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// For a 2-connected equimatchable factor-critical graph, removing a minimal
// isolating matching of any vertex together with that vertex leaves a
// connected randomly matchable graph.
inline Verdict check_isolating_remainder(Analysis& a, const HarnessOptions& opt = {}) {
  detail::require_word_size(a.graph());
  std::string gap = detail::efc_hypothesis_gap(a, 2);
  if (!gap.empty()) return detail::not_applicable(Statement::isolating_remainder, gap);

  const Graph& g = a.graph();
  const std::uint64_t full = g.full_mask();
  Verdict out{Statement::isolating_remainder, Status::holds, Json::object()};
  std::size_t checked = 0;
  EnumBudget budget = opt.make_budget(g.vertex_count());

  for (Vertex v = 0; v < g.vertex_count() && out.status == Status::holds; ++v) {
    minimal_isolating_matchings(g, v, budget, [&](const std::vector<Edge>& es) {
      ++checked;
      std::uint64_t cov = std::uint64_t{1} << v;
      for (const auto& [x, y] : es) cov |= (std::uint64_t{1} << x) | (std::uint64_t{1} << y);
      if (!subset_structural_randomly_matchable(g, full & ~cov)) {
        out.status = Status::fails;
        out.certificate["v"] = v;
        out.certificate["matching"] = detail::edges_json(es);
        out.certificate["remainder"] = vertex_set_json(VertexSet::from_mask(full & ~cov));
        return false;
      }
      return true;
    });
  }
  if (out.status == Status::holds) {
    out.certificate["matchings_checked"] = checked;
    out.bounded = budget.truncated;
  }
  return out;
}

// ---------------------------------------------------------------------------
// For a 2-connected equimatchable factor-critical graph, a matching M and an
// odd component H of G - V(M): G - (H u V(M)) is connected randomly
// matchable.
inline Verdict check_odd_component_remainder(Analysis& a, const HarnessOptions& opt = {}) {
  detail::require_word_size(a.graph());
  std::string gap = detail::efc_hypothesis_gap(a, 2);
  if (!gap.empty()) return detail::not_applicable(Statement::odd_component_remainder, gap);

  const Graph& g = a.graph();
  const std::uint64_t full = g.full_mask();
  Verdict out{Statement::odd_component_remainder, Status::holds, Json::object()};
  std::size_t checked = 0;
  EnumBudget budget = opt.make_budget(g.vertex_count());

  enumerate_matchings(g, opt.matching_size_cap, budget, [&](const std::vector<Edge>& es) {
    std::uint64_t cov = 0;
    for (const auto& [x, y] : es) cov |= (std::uint64_t{1} << x) | (std::uint64_t{1} << y);
    for (std::uint64_t comp : component_masks(g, full & ~cov)) {
      if (popcount64(comp) % 2 == 0) continue;
      ++checked;
      if (!subset_structural_randomly_matchable(g, full & ~cov & ~comp)) {
        out.status = Status::fails;
        out.certificate["matching"] = detail::edges_json(es);
        out.certificate["component"] = vertex_set_json(VertexSet::from_mask(comp));
        out.certificate["remainder"] = vertex_set_json(VertexSet::from_mask(full & ~cov & ~comp));
        return false;
      }
    }
    return true;
  });
  if (out.status == Status::holds) {
    out.certificate["pairs_checked"] = checked;
    out.bounded = budget.truncated;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Across any minimum cut S, any component H of G - S and any X subset of S
// carry at least min(|H|, |X|) independent edges.
inline Verdict check_cut_cross_matching(Analysis& a, const HarnessOptions& opt = {}) {
  detail::require_word_size(a.graph());
  if (a.complete())
    return detail::not_applicable(Statement::cut_cross_matching, "complete graph: no vertex cut");

  const Graph& g = a.graph();
  Verdict out{Statement::cut_cross_matching, Status::holds, Json::object()};
  std::size_t checked = 0;
  bool bounded = false;

  for (const CutDecomposition& cd : a.min_cuts()) {
    const int k = cd.k;
    std::uint64_t subsets = std::uint64_t{1} << k;
    if (k > 16) {  // sampled family: singletons and the full cut
      subsets = 0;
      bounded = true;
    }
    for (const VertexSet& H : cd.parts) {
      auto test_subset = [&](const VertexSet& X) {
        KonigCertificate cert = bipartite_max_matching(g, H, X);
        ++checked;
        if (cert.matching.size() < std::min(H.size(), X.size())) {
          out.status = Status::fails;
          out.certificate["cut"] = detail::cut_json(cd);
          out.certificate["H"] = vertex_set_json(H);
          out.certificate["X"] = vertex_set_json(X);
          out.certificate["matching"] = matching_json(cert.matching);
          out.certificate["cover"] = vertex_set_json(cert.cover);
          return false;
        }
        return true;
      };
      for (std::uint64_t m = 0; m < subsets; ++m) {
        std::vector<Vertex> xs;
        for (int i = 0; i < k; ++i)
          if ((m >> i) & 1) xs.push_back(cd.S[i]);
        if (!test_subset(VertexSet(std::move(xs)))) return out;
      }
      if (k > 16) {
        for (int i = 0; i < k; ++i)
          if (!test_subset(VertexSet{cd.S[i]})) return out;
        if (!test_subset(cd.S)) return out;
      }
    }
  }
  out.certificate["cuts"] = static_cast<int>(a.min_cuts().size());
  out.certificate["checks"] = checked;
  out.bounded = bounded;
  (void)opt;
  return out;
}

// ---------------------------------------------------------------------------
// k-connected EFC, a minimum cut with a singleton component and a component
// with at least k vertices: exactly two components, some matching between S
// and the large component C covers S, and C - V(M) is connected randomly
// matchable for every such M.
inline Verdict check_singleton_split(Analysis& a, const HarnessOptions& opt = {}) {
  detail::require_word_size(a.graph());
  std::string gap = detail::efc_hypothesis_gap(a, 2);
  if (!gap.empty()) return detail::not_applicable(Statement::singleton_split, gap);
  if (a.complete())
    return detail::not_applicable(Statement::singleton_split, "complete graph: no vertex cut");

  const Graph& g = a.graph();
  const int k = a.kappa();
  Verdict out{Statement::singleton_split, Status::holds, Json::object()};
  bool applicable = false;
  std::size_t matchings_checked = 0;
  bool bounded = false;

  for (const CutDecomposition& cd : a.min_cuts()) {
    bool has_singleton = false;
    const VertexSet* big = nullptr;
    for (const VertexSet& p : cd.parts) {
      if (p.size() == 1) has_singleton = true;
      if (p.size() >= k && !big) big = &p;
    }
    if (!has_singleton || !big) continue;
    applicable = true;

    if (cd.parts.size() != 2) {
      out.status = Status::fails;
      out.certificate["violation"] = "component_count";
      out.certificate["cut"] = detail::cut_json(cd);
      return out;
    }
    std::uint64_t cmask = big->mask();
    bool any = false;
    EnumBudget budget = opt.make_budget(g.vertex_count());
    detail::enumerate_saturating_cross(g, cd.S, cmask, budget, [&](const std::vector<Edge>& es) {
      any = true;
      ++matchings_checked;
      std::uint64_t cov = 0;
      for (const auto& [x, y] : es) cov |= (std::uint64_t{1} << x) | (std::uint64_t{1} << y);
      if (!subset_structural_randomly_matchable(g, cmask & ~cov)) {
        out.status = Status::fails;
        out.certificate["violation"] = "remainder";
        out.certificate["cut"] = detail::cut_json(cd);
        out.certificate["matching"] = detail::edges_json(es);
        return false;
      }
      return true;
    });
    if (out.status == Status::fails) return out;
    bounded = bounded || budget.truncated;
    if (!any) {
      out.status = Status::fails;
      out.certificate["violation"] = "no_saturating_matching";
      out.certificate["cut"] = detail::cut_json(cd);
      return out;
    }
  }
  if (!applicable)
    return detail::not_applicable(Statement::singleton_split,
                                  "no minimum cut with a singleton and a >= k component");
  out.certificate["matchings_checked"] = matchings_checked;
  out.bounded = bounded;
  return out;
}

// ---------------------------------------------------------------------------
// k-connected EFC with at least 2k+3 vertices: every minimum cut leaves
// exactly two components.
inline Verdict check_two_component_split(Analysis& a, const HarnessOptions& opt = {}) {
  detail::require_word_size(a.graph());
  (void)opt;
  std::string gap = detail::efc_hypothesis_gap(a, 2);
  if (!gap.empty()) return detail::not_applicable(Statement::two_component_split, gap);
  if (a.complete())
    return detail::not_applicable(Statement::two_component_split, "complete graph: no vertex cut");
  if (a.n() < 2 * a.kappa() + 3)
    return detail::not_applicable(Statement::two_component_split,
                                  "fewer than 2k+3 vertices");

  Verdict out{Statement::two_component_split, Status::holds, Json::object()};
  for (const CutDecomposition& cd : a.min_cuts())
    if (cd.parts.size() != 2) {
      out.status = Status::fails;
      out.certificate["cut"] = detail::cut_json(cd);
      return out;
    }
  out.certificate["cuts"] = static_cast<int>(a.min_cuts().size());
  return out;
}

// ---------------------------------------------------------------------------
// k-connected EFC, a minimum cut with a component C of >= k vertices and a
// two-vertex component: exactly two components, S has a saturating matching
// into C, and (C - V(M')) u {x} is connected randomly matchable for every
// such M' and every x in C n V(M').
inline Verdict check_pair_split(Analysis& a, const HarnessOptions& opt = {}) {
  detail::require_word_size(a.graph());
  std::string gap = detail::efc_hypothesis_gap(a, 2);
  if (!gap.empty()) return detail::not_applicable(Statement::pair_split, gap);
  if (a.complete())
    return detail::not_applicable(Statement::pair_split, "complete graph: no vertex cut");

  const Graph& g = a.graph();
  const int k = a.kappa();
  Verdict out{Statement::pair_split, Status::holds, Json::object()};
  bool applicable = false;
  std::size_t checked = 0;
  bool bounded = false;

  for (const CutDecomposition& cd : a.min_cuts()) {
    // every orientation: a component of >= k vertices with a distinct
    // 2-vertex component elsewhere
    for (std::size_t ci = 0; ci < cd.parts.size(); ++ci) {
      const VertexSet& C = cd.parts[ci];
      if (C.size() < k) continue;
      bool has_pair = false;
      for (std::size_t di = 0; di < cd.parts.size(); ++di)
        if (di != ci && cd.parts[di].size() == 2) has_pair = true;
      if (!has_pair) continue;
      applicable = true;

      if (cd.parts.size() != 2) {
        out.status = Status::fails;
        out.certificate["violation"] = "component_count";
        out.certificate["cut"] = detail::cut_json(cd);
        return out;
      }
      std::uint64_t cmask = C.mask();
      bool any = false;
      EnumBudget budget = opt.make_budget(g.vertex_count());
      detail::enumerate_saturating_cross(g, cd.S, cmask, budget, [&](const std::vector<Edge>& es) {
        any = true;
        std::uint64_t cov = 0;
        for (const auto& [x, y] : es) cov |= (std::uint64_t{1} << x) | (std::uint64_t{1} << y);
        for (std::uint64_t xb = cmask & cov; xb; xb &= xb - 1) {
          Vertex x = static_cast<Vertex>(__builtin_ctzll(xb));
          ++checked;
          std::uint64_t keep = (cmask & ~cov) | (std::uint64_t{1} << x);
          if (!subset_structural_randomly_matchable(g, keep)) {
            out.status = Status::fails;
            out.certificate["violation"] = "remainder";
            out.certificate["cut"] = detail::cut_json(cd);
            out.certificate["matching"] = detail::edges_json(es);
            out.certificate["x"] = x;
            return false;
          }
        }
        return true;
      });
      if (out.status == Status::fails) return out;
      bounded = bounded || budget.truncated;
      if (!any) {
        out.status = Status::fails;
        out.certificate["violation"] = "no_saturating_matching";
        out.certificate["cut"] = detail::cut_json(cd);
        return out;
      }
    }
  }
  if (!applicable)
    return detail::not_applicable(Statement::pair_split,
                                  "no minimum cut with a 2-vertex and a >= k component");
  out.certificate["checks"] = checked;
  out.bounded = bounded;
  return out;
}

// ---------------------------------------------------------------------------
// Case analysis for k >= 3, a minimum cut with a >= k component C and a
// two-vertex component: if S contains an edge then C is complete; if S is
// independent then G[C u S] extends to K_{n,n+1} by adding a set of missing
// S-to-C pairs with pairwise distinct endpoints.
namespace detail {

struct CaseBResult {
  bool ok = false;
  std::vector<Edge> completion;
  VertexSet side_with_s, other_side;
};

inline CaseBResult case_b_completion(const Graph& g, const VertexSet& S, const VertexSet& C) {
  CaseBResult res;
  VertexSet cs = set_union(C, S);
  InducedSubgraph h = induced_subgraph(g, cs);

  auto comps = components(h.graph);
  std::vector<std::pair<VertexSet, VertexSet>> colorings;
  for (const VertexSet& comp : comps) {
    InducedSubgraph sub = induced_subgraph(h.graph, comp);
    VertexSet a, b;
    if (!bipartition(sub.graph, a, b)) return res;  // odd cycle: not bipartite
    std::vector<Vertex> av, bv;
    for (Vertex v : a) av.push_back(comp[v]);
    for (Vertex v : b) bv.push_back(comp[v]);
    colorings.push_back({VertexSet(std::move(av)), VertexSet(std::move(bv))});
  }
  if (colorings.size() > 20) return res;  // out of scope; caller reports bounded

  const std::uint64_t combos = std::uint64_t{1} << colorings.size();
  for (std::uint64_t pickmask = 0; pickmask < combos; ++pickmask) {
    std::vector<Vertex> side1v, side2v;
    for (std::size_t i = 0; i < colorings.size(); ++i) {
      const auto& [a, b] = colorings[i];
      const VertexSet& to1 = ((pickmask >> i) & 1) ? b : a;
      const VertexSet& to2 = ((pickmask >> i) & 1) ? a : b;
      for (Vertex v : to1) side1v.push_back(v);
      for (Vertex v : to2) side2v.push_back(v);
    }
    VertexSet side1(std::move(side1v)), side2(std::move(side2v));  // local ids of h

    auto local_has_s = [&](const VertexSet& side) {
      for (Vertex v : side)
        if (S.contains(h.to_parent[static_cast<std::size_t>(v)])) return true;
      return false;
    };
    // S entirely on one side, which must be the larger one
    if (local_has_s(side2)) {
      if (local_has_s(side1)) continue;
      std::swap(side1, side2);
    }
    if (side1.size() != side2.size() + 1) continue;

    std::vector<Edge> completion;
    bool ok = true;
    std::vector<char> used_s(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<char> used_c(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex u : side1) {
      for (Vertex v : side2) {
        if (h.graph.has_edge(u, v)) continue;
        Vertex gu = h.to_parent[static_cast<std::size_t>(u)];
        Vertex gv = h.to_parent[static_cast<std::size_t>(v)];
        if (!S.contains(gu) || used_s[static_cast<std::size_t>(gu)] ||
            used_c[static_cast<std::size_t>(gv)]) {
          ok = false;
          break;
        }
        used_s[static_cast<std::size_t>(gu)] = 1;
        used_c[static_cast<std::size_t>(gv)] = 1;
        completion.push_back(make_edge(gu, gv));
      }
      if (!ok) break;
    }
    if (!ok) continue;

    std::vector<Vertex> s1g, s2g;
    for (Vertex v : side1) s1g.push_back(h.to_parent[static_cast<std::size_t>(v)]);
    for (Vertex v : side2) s2g.push_back(h.to_parent[static_cast<std::size_t>(v)]);
    res.ok = true;
    std::sort(completion.begin(), completion.end());
    res.completion = std::move(completion);
    res.side_with_s = VertexSet(std::move(s1g));
    res.other_side = VertexSet(std::move(s2g));
    return res;
  }
  return res;
}

}  // namespace detail

inline Verdict check_cut_structure(Analysis& a, const HarnessOptions& opt = {}) {
  detail::require_word_size(a.graph());
  std::string gap = detail::efc_hypothesis_gap(a, 3);
  if (!gap.empty()) return detail::not_applicable(Statement::cut_structure, gap);
  if (a.complete())
    return detail::not_applicable(Statement::cut_structure, "complete graph: no vertex cut");

  const Graph& g = a.graph();
  const int k = a.kappa();
  Verdict out{Statement::cut_structure, Status::holds, Json::object()};
  Json cuts_report = Json::array();
  bool applicable = false;

  for (const CutDecomposition& cd : a.min_cuts()) {
    const VertexSet* big = nullptr;
    bool has_pair = false;
    for (const VertexSet& p : cd.parts)
      if (p.size() >= k && !big) big = &p;
    for (const VertexSet& p : cd.parts)
      if (p.size() == 2 && (!big || !(p == *big))) has_pair = true;
    if (!big || !has_pair) continue;
    applicable = true;

    if (cd.parts.size() != 2) {
      out.status = Status::fails;
      out.certificate["violation"] = "component_count";
      out.certificate["cut"] = detail::cut_json(cd);
      return out;
    }
    const VertexSet& C = *big;

    bool s_has_edge = false;
    for (int i = 0; i < cd.S.size() && !s_has_edge; ++i)
      for (int j = i + 1; j < cd.S.size(); ++j)
        if (g.has_edge(cd.S[i], cd.S[j])) {
          s_has_edge = true;
          break;
        }

    Json rep;
    rep["cut"] = detail::cut_json(cd);
    rep["case"] = s_has_edge ? "A" : "B";

    // structural roles for the report: X = C-endpoints of the first
    // saturating S -> C matching, C' = C - X
    {
      std::vector<Edge> first;
      EnumBudget b1{1};
      detail::enumerate_saturating_cross(g, cd.S, C.mask(), b1, [&](const std::vector<Edge>& es) {
        first = es;
        return false;
      });
      std::vector<Vertex> xs;
      for (const auto& [u, v] : first) xs.push_back(C.contains(u) ? u : v);
      VertexSet X(std::move(xs));
      rep["X"] = vertex_set_json(X);
      rep["Cprime"] = vertex_set_json(set_difference(C, X));
    }

    if (s_has_edge) {
      for (int i = 0; i < C.size(); ++i)
        for (int j = i + 1; j < C.size(); ++j)
          if (!g.has_edge(C[i], C[j])) {
            out.status = Status::fails;
            out.certificate["violation"] = "case_A_component_incomplete";
            out.certificate["cut"] = detail::cut_json(cd);
            out.certificate["nonadjacent_pair"] = Json::array({C[i], C[j]});
            return out;
          }
    } else {
      detail::CaseBResult res = detail::case_b_completion(g, cd.S, C);
      if (!res.ok) {
        out.status = Status::fails;
        out.certificate["violation"] = "case_B_no_completion";
        out.certificate["cut"] = detail::cut_json(cd);
        return out;
      }
      rep["completion"] = detail::edges_json(res.completion);
      // partite sets of C': the S-side minus S gives W, the other side minus X gives U
      VertexSet X;
      {
        std::vector<Vertex> xs;
        for (const auto& s : rep["X"]) xs.push_back(s.get<Vertex>());
        X = VertexSet(std::move(xs));
      }
      rep["W"] = vertex_set_json(set_difference(res.side_with_s, cd.S));
      rep["U"] = vertex_set_json(set_difference(res.other_side, X));
    }
    cuts_report.push_back(rep);
  }
  if (!applicable)
    return detail::not_applicable(Statement::cut_structure,
                                  "no minimum cut with a 2-vertex and a >= k component");
  out.certificate["cuts"] = cuts_report;
  (void)opt;
  return out;
}

// ---------------------------------------------------------------------------
// k >= 3, at least 2k+3 vertices, EFC, a minimum cut with two components of
// >= 3 vertices: exactly two components and both complete.
inline Verdict check_both_components_complete(Analysis& a, const HarnessOptions& opt = {}) {
  detail::require_word_size(a.graph());
  (void)opt;
  std::string gap = detail::efc_hypothesis_gap(a, 3);
  if (!gap.empty()) return detail::not_applicable(Statement::both_components_complete, gap);
  if (a.complete())
    return detail::not_applicable(Statement::both_components_complete,
                                  "complete graph: no vertex cut");
  if (a.n() < 2 * a.kappa() + 3)
    return detail::not_applicable(Statement::both_components_complete,
                                  "fewer than 2k+3 vertices");

  const Graph& g = a.graph();
  Verdict out{Statement::both_components_complete, Status::holds, Json::object()};
  bool applicable = false;
  int qualifying = 0;
  for (const CutDecomposition& cd : a.min_cuts()) {
    int big = 0;
    for (const VertexSet& p : cd.parts)
      if (p.size() >= 3) ++big;
    if (big < 2) continue;
    applicable = true;
    ++qualifying;
    if (cd.parts.size() != 2) {
      out.status = Status::fails;
      out.certificate["violation"] = "component_count";
      out.certificate["cut"] = detail::cut_json(cd);
      return out;
    }
    for (const VertexSet& p : cd.parts)
      for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j)
          if (!g.has_edge(p[i], p[j])) {
            out.status = Status::fails;
            out.certificate["violation"] = "component_incomplete";
            out.certificate["cut"] = detail::cut_json(cd);
            out.certificate["nonadjacent_pair"] = Json::array({p[i], p[j]});
            return out;
          }
  }
  if (!applicable)
    return detail::not_applicable(Statement::both_components_complete,
                                  "no minimum cut with two components of >= 3 vertices");
  out.certificate["qualifying_cuts"] = qualifying;
  return out;
}

// ---------------------------------------------------------------------------
// k-connected EFC, k >= 3: a minimum cut leaves at most k components.
inline Verdict check_component_count_bound(Analysis& a, const HarnessOptions& opt = {}) {
  detail::require_word_size(a.graph());
  (void)opt;
  std::string gap = detail::efc_hypothesis_gap(a, 3);
  if (!gap.empty()) return detail::not_applicable(Statement::component_count_bound, gap);
  if (a.complete())
    return detail::not_applicable(Statement::component_count_bound,
                                  "complete graph: no vertex cut");

  Verdict out{Statement::component_count_bound, Status::holds, Json::object()};
  int max_parts = 0;
  for (const CutDecomposition& cd : a.min_cuts()) {
    max_parts = std::max(max_parts, static_cast<int>(cd.parts.size()));
    if (static_cast<int>(cd.parts.size()) > a.kappa()) {
      out.status = Status::fails;
      out.certificate["cut"] = detail::cut_json(cd);
      return out;
    }
  }
  out.certificate["max_components"] = max_parts;
  out.certificate["k"] = a.kappa();
  return out;
}

// ---------------------------------------------------------------------------
// Connectivity 1: G is EFC iff G has exactly one cut-vertex d, every
// component of G - d is randomly matchable, and d has two adjacent neighbors
// in each component.
inline Verdict check_cutvertex_characterization(Analysis& a, const HarnessOptions& opt = {}) {
  detail::require_word_size(a.graph());
  (void)opt;
  if (a.kappa() != 1)
    return detail::not_applicable(Statement::cutvertex_characterization,
                                  "kappa = " + std::to_string(a.kappa()) + " != 1");

  const Graph& g = a.graph();
  bool lhs = a.equimatchable().equimatchable && a.factor_critical();

  std::vector<Vertex> cutvertices;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (components_without(g, VertexSet{v}).size() > 1) cutvertices.push_back(v);

  bool rhs = cutvertices.size() == 1;
  std::string failed_condition = rhs ? "" : "more than one cut-vertex";
  if (rhs) {
    Vertex d = cutvertices[0];
    for (const VertexSet& comp : components_without(g, VertexSet{d})) {
      if (!is_randomly_matchable(induced(g, comp))) {
        rhs = false;
        failed_condition = "component not randomly matchable";
        break;
      }
      bool two_adjacent = false;
      for (int i = 0; i < comp.size() && !two_adjacent; ++i)
        for (int j = i + 1; j < comp.size(); ++j)
          if (g.has_edge(comp[i], comp[j]) && g.has_edge(d, comp[i]) && g.has_edge(d, comp[j])) {
            two_adjacent = true;
            break;
          }
      if (!two_adjacent) {
        rhs = false;
        failed_condition = "cut-vertex lacks two adjacent neighbors in a component";
        break;
      }
    }
  }

  Verdict out{Statement::cutvertex_characterization, lhs == rhs ? Status::holds : Status::fails,
              Json::object()};
  out.certificate["efc"] = lhs;
  out.certificate["conditions"] = rhs;
  if (!rhs && !failed_condition.empty()) out.certificate["failed_condition"] = failed_condition;
  if (lhs != rhs) out.certificate["cutvertices"] = vertex_set_json(VertexSet(cutvertices));
  return out;
}

// ---------------------------------------------------------------------------
// Connectivity 2, EFC, n >= 4: every 2-cut splits G into an even component A
// and an odd component B; B is complete, complete minus a qualifying edge, or
// near-balanced complete bipartite (possibly plus a qualifying edge) with all
// cut neighbors in the larger side; A - {a1, a2} is connected randomly
// matchable for a qualifying choice of a1, a2, and A itself is when |B| > 1.
namespace detail {

inline bool shape_near_bipartite(const Graph& g, const VertexSet& B, Vertex s1, Vertex s2,
                                 bool allow_extra_edge) {
  InducedSubgraph sub = induced_subgraph(g, B);
  const int nb = sub.graph.vertex_count();
  auto check_base = [&](const Graph& base, std::optional<Edge> extra) {
    VertexSet a, b;
    if (!bipartition(base, a, b)) return false;
    if (nb > 1 && !is_connected(base)) return false;
    if (base.edge_count() != static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(b.size()))
      return false;
    if (std::abs(a.size() - b.size()) != 1) return false;
    const VertexSet& larger = a.size() > b.size() ? a : b;
    // all neighbors of the cut inside B lie in the larger partite set
    for (Vertex v = 0; v < nb; ++v) {
      Vertex gv = sub.to_parent[static_cast<std::size_t>(v)];
      if ((g.has_edge(s1, gv) || g.has_edge(s2, gv)) && !larger.contains(v)) return false;
    }
    if (extra) {
      // the added edge must join b1 ~ s1 with b2 ~ s2 (in some order)
      Vertex x = sub.to_parent[static_cast<std::size_t>(extra->first)];
      Vertex y = sub.to_parent[static_cast<std::size_t>(extra->second)];
      if (!((g.has_edge(s1, x) && g.has_edge(s2, y)) || (g.has_edge(s1, y) && g.has_edge(s2, x))))
        return false;
      if (x == y) return false;
    }
    return true;
  };
  if (!allow_extra_edge) return check_base(sub.graph, std::nullopt);
  for (const Edge& e : sub.graph.edges()) {
    std::vector<Edge> rest;
    for (const Edge& f : sub.graph.edges())
      if (f != e) rest.push_back(f);
    if (check_base(Graph::from_edges(nb, rest), e)) return true;
  }
  return false;
}

}  // namespace detail

inline Verdict check_two_cut_characterization(Analysis& a, const HarnessOptions& opt = {}) {
  detail::require_word_size(a.graph());
  (void)opt;
  if (a.kappa() != 2)
    return detail::not_applicable(Statement::two_cut_characterization,
                                  "kappa = " + std::to_string(a.kappa()) + " != 2");
  std::string gap = detail::efc_hypothesis_gap(a, 2);
  if (!gap.empty()) return detail::not_applicable(Statement::two_cut_characterization, gap);
  if (a.n() < 4)
    return detail::not_applicable(Statement::two_cut_characterization, "fewer than 4 vertices");

  const Graph& g = a.graph();
  Verdict out{Statement::two_cut_characterization, Status::holds, Json::object()};
  int cuts = 0;

  for (const CutDecomposition& cd : a.min_cuts()) {
    ++cuts;
    auto fail = [&](const std::string& clause) {
      out.status = Status::fails;
      out.certificate["violation"] = clause;
      out.certificate["cut"] = detail::cut_json(cd);
      return out;
    };
    if (cd.parts.size() != 2) return fail("component_count");
    const VertexSet &p0 = cd.parts[0], &p1 = cd.parts[1];
    if ((p0.size() + p1.size()) % 2 == 0 || p0.size() % 2 == p1.size() % 2)
      return fail("parity");
    const VertexSet& A = p0.size() % 2 == 0 ? p0 : p1;
    const VertexSet& B = p0.size() % 2 == 0 ? p1 : p0;
    Vertex s1 = cd.S[0], s2 = cd.S[1];

    // shape of the odd component
    InducedSubgraph bs = induced_subgraph(g, B);
    bool shape_ok = is_complete(bs.graph);
    if (!shape_ok) {
      auto missing = complement_edges(bs.graph);
      if (missing.size() == 1) {
        Vertex x = bs.to_parent[static_cast<std::size_t>(missing[0].first)];
        Vertex y = bs.to_parent[static_cast<std::size_t>(missing[0].second)];
        shape_ok = (g.has_edge(s1, x) && g.has_edge(s2, y)) ||
                   (g.has_edge(s1, y) && g.has_edge(s2, x));
      }
    }
    if (!shape_ok) shape_ok = detail::shape_near_bipartite(g, B, s1, s2, false);
    if (!shape_ok) shape_ok = detail::shape_near_bipartite(g, B, s1, s2, true);
    if (!shape_ok) return fail("odd_component_shape");

    // even component: some choice a1 ~ s1, a2 ~ s2, a1 != a2 leaves a
    // connected randomly matchable rest
    bool choice_ok = false;
    for (Vertex a1 : A)
      for (Vertex a2 : A) {
        if (a1 == a2 || !g.has_edge(s1, a1) || !g.has_edge(s2, a2)) continue;
        std::uint64_t rest = A.mask() & ~(std::uint64_t{1} << a1) & ~(std::uint64_t{1} << a2);
        if (subset_structural_randomly_matchable(g, rest)) {
          choice_ok = true;
          break;
        }
      }
    if (!choice_ok) return fail("even_component_after_attachment");
    if (B.size() > 1 && !subset_structural_randomly_matchable(g, A.mask()))
      return fail("even_component_not_randomly_matchable");
  }
  out.certificate["cuts"] = cuts;
  return out;
}

// ---------------------------------------------------------------------------
// Independence number 2: odd graphs are equimatchable; even graphs are
// randomly matchable or (not equimatchable, with a perfect matching, and
// every maximal matching exposes at most two vertices).
inline Verdict check_alpha2_matchings(Analysis& a, const HarnessOptions& opt = {}) {
  detail::require_word_size(a.graph());
  if (a.alpha() != 2)
    return detail::not_applicable(Statement::alpha2_matchings,
                                  "alpha = " + std::to_string(a.alpha()) + " != 2");

  const Graph& g = a.graph();
  Verdict out{Statement::alpha2_matchings, Status::holds, Json::object()};
  if (a.n() % 2 == 1) {
    out.certificate["branch"] = "odd";
    if (!a.equimatchable().equimatchable) {
      out.status = Status::fails;
      out.certificate["violation"] = "odd_but_not_equimatchable";
      out.certificate["witness"] = matching_json(a.equimatchable().witness->maximal);
    }
    return out;
  }

  bool rm = a.randomly_matchable();
  if (rm) {
    out.certificate["branch"] = "even_randomly_matchable";
    return out;
  }
  out.certificate["branch"] = "even_not_equimatchable";
  if (a.equimatchable().equimatchable) {
    out.status = Status::fails;
    out.certificate["violation"] = "even_equimatchable_without_perfect_matching";
    return out;
  }
  if (a.def() != 0) {
    out.status = Status::fails;
    out.certificate["violation"] = "no_perfect_matching";
    return out;
  }
  EnumBudget budget = opt.make_budget(a.n());
  int worst = 0;
  enumerate_maximal_matchings(g, -1, budget, [&](const std::vector<Edge>& es) {
    worst = std::max(worst, a.n() - 2 * static_cast<int>(es.size()));
    return worst <= 2;
  });
  if (worst > 2) {
    out.status = Status::fails;
    out.certificate["violation"] = "maximal_matching_exposes_more_than_two";
    out.certificate["exposed"] = worst;
    return out;
  }
  out.certificate["max_exposed"] = worst;
  out.bounded = budget.truncated;
  return out;
}

// ---------------------------------------------------------------------------
// Connected odd graphs with independence number 2 are factor-critical or a
// union of two complete graphs joined through a single cut-vertex that
// dominates at least one of them.
inline Verdict check_odd_alpha2_structure(Analysis& a, const HarnessOptions& opt = {}) {
  detail::require_word_size(a.graph());
  (void)opt;
  if (!a.connected())
    return detail::not_applicable(Statement::odd_alpha2_structure, "not connected");
  if (a.n() % 2 == 0)
    return detail::not_applicable(Statement::odd_alpha2_structure, "even vertex count");
  if (a.alpha() != 2)
    return detail::not_applicable(Statement::odd_alpha2_structure,
                                  "alpha = " + std::to_string(a.alpha()) + " != 2");

  Verdict out{Statement::odd_alpha2_structure, Status::holds, Json::object()};
  if (a.factor_critical()) {
    out.certificate["branch"] = "factor_critical";
    return out;
  }
  const Graph& g = a.graph();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto comps = components_without(g, VertexSet{v});
    if (comps.size() != 2) continue;
    bool both_complete = true;
    for (const VertexSet& c : comps)
      both_complete = both_complete && is_complete(induced(g, c));
    if (!both_complete) continue;
    for (const VertexSet& c : comps) {
      bool dominates = true;
      for (Vertex w : c)
        if (!g.has_edge(v, w)) {
          dominates = false;
          break;
        }
      if (dominates) {
        out.certificate["branch"] = "cutvertex_structure";
        out.certificate["cutvertex"] = v;
        return out;
      }
    }
  }
  out.status = Status::fails;
  out.certificate["violation"] = "neither_factor_critical_nor_cutvertex_structure";
  return out;
}

// ---------------------------------------------------------------------------
// k >= 3, EFC, a minimum cut with exactly two components, both complete: for
// each s in S there is a matching inside S - s leaving 2 (k even) or 3
// (k odd) vertices of S uncovered.
inline Verdict check_cut_internal_matching(Analysis& a, const HarnessOptions& opt = {}) {
  detail::require_word_size(a.graph());
  (void)opt;
  std::string gap = detail::efc_hypothesis_gap(a, 3);
  if (!gap.empty()) return detail::not_applicable(Statement::cut_internal_matching, gap);
  if (a.complete())
    return detail::not_applicable(Statement::cut_internal_matching,
                                  "complete graph: no vertex cut");

  const Graph& g = a.graph();
  const int k = a.kappa();
  const int need = (k % 2 == 0) ? (k - 2) / 2 : (k - 3) / 2;
  Verdict out{Statement::cut_internal_matching, Status::holds, Json::object()};
  bool applicable = false;
  int checks = 0;

  for (const CutDecomposition& cd : a.min_cuts()) {
    if (cd.parts.size() != 2) continue;
    bool both_complete = true;
    for (const VertexSet& p : cd.parts)
      both_complete = both_complete && is_complete(induced(g, p));
    if (!both_complete) continue;
    applicable = true;
    for (Vertex s : cd.S) {
      VertexSet rest = cd.S;
      rest.erase(s);
      ++checks;
      if (matching_number(induced(g, rest)) < need) {
        out.status = Status::fails;
        out.certificate["cut"] = detail::cut_json(cd);
        out.certificate["s"] = s;
        out.certificate["needed_edges"] = need;
        return out;
      }
    }
  }
  if (!applicable)
    return detail::not_applicable(Statement::cut_internal_matching,
                                  "no minimum cut with exactly two complete components");
  out.certificate["checks"] = checks;
  return out;
}

// ---------------------------------------------------------------------------
// k >= 4, n >= 2k+3, EFC, a minimum cut with two components of >= 3
// vertices: every triple (s, c, d) across the cut spans an edge.
inline Verdict check_triple_spans_edge(Analysis& a, const HarnessOptions& opt = {}) {
  detail::require_word_size(a.graph());
  (void)opt;
  std::string gap = detail::efc_hypothesis_gap(a, 4);
  if (!gap.empty()) return detail::not_applicable(Statement::triple_spans_edge, gap);
  if (a.complete())
    return detail::not_applicable(Statement::triple_spans_edge, "complete graph: no vertex cut");
  if (a.n() < 2 * a.kappa() + 3)
    return detail::not_applicable(Statement::triple_spans_edge, "fewer than 2k+3 vertices");

  const Graph& g = a.graph();
  Verdict out{Statement::triple_spans_edge, Status::holds, Json::object()};
  bool applicable = false;
  std::size_t triples = 0;

  for (const CutDecomposition& cd : a.min_cuts()) {
    if (cd.parts.size() != 2 || cd.parts[0].size() < 3 || cd.parts[1].size() < 3) continue;
    applicable = true;
    const std::uint64_t cm = cd.parts[0].mask(), dm = cd.parts[1].mask();
    for (Vertex s : cd.S) {
      // c and d are never adjacent (different components), so the triple
      // spans an edge iff s sees c or d
      std::uint64_t badc = cm & ~g.neighbor_mask(s), badd = dm & ~g.neighbor_mask(s);
      triples += static_cast<std::size_t>(popcount64(cm)) * static_cast<std::size_t>(popcount64(dm));
      if (badc && badd) {
        out.status = Status::fails;
        out.certificate["cut"] = detail::cut_json(cd);
        out.certificate["triple"] =
            Json::array({s, static_cast<Vertex>(__builtin_ctzll(badc)),
                         static_cast<Vertex>(__builtin_ctzll(badd))});
        return out;
      }
    }
  }
  if (!applicable)
    return detail::not_applicable(Statement::triple_spans_edge,
                                  "no minimum cut with two components of >= 3 vertices");
  out.certificate["triples_checked"] = triples;
  return out;
}

// ---------------------------------------------------------------------------
// k >= 4, odd, n >= 2k+3, a minimum cut with two components of >= 3
// vertices: independence number at most 2 iff equimatchable and
// factor-critical.
inline Verdict check_alpha2_iff_efc(Analysis& a, const HarnessOptions& opt = {}) {
  detail::require_word_size(a.graph());
  (void)opt;
  if (a.n() % 2 == 0)
    return detail::not_applicable(Statement::alpha2_iff_efc, "even vertex count");
  if (a.kappa() < 4)
    return detail::not_applicable(Statement::alpha2_iff_efc,
                                  "kappa = " + std::to_string(a.kappa()) + " < 4");
  if (a.n() < 2 * a.kappa() + 3)
    return detail::not_applicable(Statement::alpha2_iff_efc, "fewer than 2k+3 vertices");
  bool qualifying_cut = false;
  for (const CutDecomposition& cd : a.min_cuts()) {
    int big = 0;
    for (const VertexSet& p : cd.parts)
      if (p.size() >= 3) ++big;
    if (big >= 2) {
      qualifying_cut = true;
      break;
    }
  }
  if (!qualifying_cut)
    return detail::not_applicable(Statement::alpha2_iff_efc,
                                  "no minimum cut with two components of >= 3 vertices");

  bool lhs = a.alpha() <= 2;
  bool rhs = a.efc();
  Verdict out{Statement::alpha2_iff_efc, lhs == rhs ? Status::holds : Status::fails,
              Json::object()};
  out.certificate["alpha"] = a.alpha();
  out.certificate["efc"] = rhs;
  if (lhs != rhs) {
    if (!lhs) out.certificate["independent_witness"] = vertex_set_json(a.alpha_certificate().witness);
    if (!rhs && a.equimatchable().witness)
      out.certificate["equimatchability_witness"] =
          matching_json(a.equimatchable().witness->maximal);
  }
  return out;
}

// ---------------------------------------------------------------------------
// 2-connected odd graphs with >= 5 vertices: independence number at most 2
// iff G is EFC and G + e is equimatchable for every complement edge e.
inline Verdict check_complement_edge_equimatchable(Analysis& a, const HarnessOptions& opt = {}) {
  detail::require_word_size(a.graph());
  (void)opt;
  if (a.kappa() < 2)
    return detail::not_applicable(Statement::complement_edge_equimatchable,
                                  "kappa = " + std::to_string(a.kappa()) + " < 2");
  if (a.n() % 2 == 0)
    return detail::not_applicable(Statement::complement_edge_equimatchable, "even vertex count");
  if (a.n() < 5)
    return detail::not_applicable(Statement::complement_edge_equimatchable,
                                  "fewer than 5 vertices");

  const Graph& g = a.graph();
  bool lhs = a.alpha() <= 2;
  bool rhs = a.efc();
  std::optional<Edge> witness_edge;
  int scanned = 0;
  if (rhs) {
    for (const Edge& e : complement_edges(g)) {
      ++scanned;
      if (!is_equimatchable(g.plus_edge(e.first, e.second)).equimatchable) {
        rhs = false;
        witness_edge = e;
        break;
      }
    }
  }

  Verdict out{Statement::complement_edge_equimatchable,
              lhs == rhs ? Status::holds : Status::fails, Json::object()};
  out.certificate["alpha"] = a.alpha();
  out.certificate["rhs"] = rhs;
  out.certificate["complement_edges_scanned"] = scanned;
  if (witness_edge)
    out.certificate["witness_edge"] =
        std::to_string(witness_edge->first) + "-" + std::to_string(witness_edge->second);
  if (lhs != rhs && !lhs)
    out.certificate["independent_witness"] = vertex_set_json(a.alpha_certificate().witness);
  return out;
}

}  // namespace matchkit
