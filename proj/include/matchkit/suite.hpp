#pragma once

#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "matchkit/checkers.hpp"
#include "matchkit/enumerate.hpp"

namespace matchkit {

struct SuiteItem {
  std::string name;
  Graph graph;
};

using StatementFilter = std::optional<std::set<Statement>>;

inline std::vector<Verdict> run_all_checkers(Analysis& a, const HarnessOptions& opt = {},
                                             const StatementFilter& filter = std::nullopt) {
  std::vector<Verdict> out;
  auto want = [&](Statement s) { return !filter || filter->count(s) > 0; };
  auto timed = [&](Statement s, auto&& fn) {
    if (!want(s)) return;
    auto t0 = std::chrono::steady_clock::now();
    Verdict v = fn();
    v.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - t0);
    out.push_back(std::move(v));
  };
  timed(Statement::isolating_remainder, [&] { return check_isolating_remainder(a, opt); });
  timed(Statement::odd_component_remainder, [&] { return check_odd_component_remainder(a, opt); });
  timed(Statement::cut_cross_matching, [&] { return check_cut_cross_matching(a, opt); });
  timed(Statement::singleton_split, [&] { return check_singleton_split(a, opt); });
  timed(Statement::two_component_split, [&] { return check_two_component_split(a, opt); });
  timed(Statement::pair_split, [&] { return check_pair_split(a, opt); });
  timed(Statement::cut_structure, [&] { return check_cut_structure(a, opt); });
  timed(Statement::both_components_complete,
        [&] { return check_both_components_complete(a, opt); });
  timed(Statement::component_count_bound, [&] { return check_component_count_bound(a, opt); });
  timed(Statement::cutvertex_characterization,
        [&] { return check_cutvertex_characterization(a, opt); });
  timed(Statement::two_cut_characterization,
        [&] { return check_two_cut_characterization(a, opt); });
  timed(Statement::alpha2_matchings, [&] { return check_alpha2_matchings(a, opt); });
  timed(Statement::odd_alpha2_structure, [&] { return check_odd_alpha2_structure(a, opt); });
  timed(Statement::cut_internal_matching, [&] { return check_cut_internal_matching(a, opt); });
  timed(Statement::triple_spans_edge, [&] { return check_triple_spans_edge(a, opt); });
  timed(Statement::alpha2_iff_efc, [&] { return check_alpha2_iff_efc(a, opt); });
  timed(Statement::complement_edge_equimatchable,
        [&] { return check_complement_edge_equimatchable(a, opt); });
  return out;
}

struct StatementCounts {
  int holds = 0;
  int fails = 0;
  int not_applicable = 0;
  int bounded = 0;
};

struct SuiteResult {
  std::vector<std::pair<std::string, std::vector<Verdict>>> runs;
  std::map<Statement, StatementCounts> counts;
  int total_fails = 0;
};

/// Runs all (filtered) checkers over every item. Items are distributed over
/// `jobs` workers; results are collected by item index, so output order and
/// the aggregated summary do not depend on scheduling.
inline SuiteResult run_suite(const std::vector<SuiteItem>& items, const HarnessOptions& opt = {},
                             int jobs = 1, const StatementFilter& filter = std::nullopt) {
  SuiteResult result;
  result.runs.resize(items.size());

  auto work = [&](std::size_t i) {
    Analysis a(items[i].graph);
    result.runs[i] = {items[i].name, run_all_checkers(a, opt, filter)};
  };

  if (jobs <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= items.size()) return;
          work(i);
        }
      });
    for (auto& th : pool) th.join();
  }

  for (Statement s : kSuiteStatements) result.counts[s];
  for (const auto& [name, verdicts] : result.runs)
    for (const Verdict& v : verdicts) {
      StatementCounts& c = result.counts[v.statement];
      switch (v.status) {
        case Status::holds: ++c.holds; break;
        case Status::fails: ++c.fails; ++result.total_fails; break;
        case Status::not_applicable: ++c.not_applicable; break;
      }
      if (v.bounded) ++c.bounded;
    }
  return result;
}

inline Json suite_summary_json(const SuiteResult& r) {
  Json by_statement = Json::object();
  for (const auto& [s, c] : r.counts) {
    Json row;
    row["holds"] = c.holds;
    row["fails"] = c.fails;
    row["not_applicable"] = c.not_applicable;
    row["bounded"] = c.bounded;
    by_statement[statement_name(s)] = row;
  }
  Json j;
  j["graphs"] = static_cast<int>(r.runs.size());
  j["total_fails"] = r.total_fails;
  j["by_statement"] = by_statement;
  return j;
}

// ---------------------------------------------------------------------------
// Fixture discovery. Statements whose smallest instances need connectivity 4
// or 5 (triple_spans_edge, alpha2_iff_efc, the case-A branch of
// cut_structure) are exercised through a deterministic scan of join-style
// candidates: two complete graphs fully joined to a small graph on the cut.

struct FixtureSearchReport {
  int candidates = 0;
  int wrong_connectivity = 0;
  int not_efc = 0;
  std::vector<SuiteItem> fixtures;
};

inline FixtureSearchReport join_fixture_search(int max_vertices = 13) {
  FixtureSearchReport rep;
  std::set<std::string> seen;
  for (int k = 3; k <= 5; ++k) {
    for (const Graph& sg : nonisomorphic_graphs(k)) {
      std::string scode = emit_graph6(sg);
      for (int a = 3; a + 2 + k <= max_vertices; ++a)
        for (int b = 2; b <= a && a + b + k <= max_vertices; ++b) {
          if ((a + b + k) % 2 == 0) continue;
          ++rep.candidates;
          std::vector<Edge> edges = sg.edges();
          const int c0 = k, d0 = k + a, total = k + a + b;
          for (int u = c0; u < d0; ++u)
            for (int v = u + 1; v < d0; ++v) edges.push_back({u, v});
          for (int u = d0; u < total; ++u)
            for (int v = u + 1; v < total; ++v) edges.push_back({u, v});
          for (int s = 0; s < k; ++s)
            for (int v = c0; v < total; ++v) edges.push_back({s, v});
          Graph g = Graph::from_edges(total, edges);
          if (vertex_connectivity(g) != k) {
            ++rep.wrong_connectivity;
            continue;
          }
          if (!(is_equimatchable(g).equimatchable && is_factor_critical(g))) {
            ++rep.not_efc;
            continue;
          }
          if (!seen.insert(canonical_graph6(g)).second) continue;
          rep.fixtures.push_back({"join_fixture(k=" + std::to_string(k) + ",S=" + scode +
                                      ",a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")",
                                  std::move(g)});
        }
    }
  }
  return rep;
}

/// The deterministic construction source: every family instance the library
/// pins plus the discovered join fixtures, deduplicated up to isomorphism.
inline std::vector<SuiteItem> construction_suite(FixtureSearchReport* fixture_report = nullptr) {
  std::vector<LabeledGraph> built;
  for (int n : {4, 5, 6, 7}) built.push_back(build({Family::complete, {n}}));
  for (auto [x, y] : {std::pair{1, 3}, {2, 2}, {2, 3}, {3, 3}, {3, 4}})
    built.push_back(build({Family::complete_bipartite, {x, y}}));
  for (int n : {5, 7, 9}) built.push_back(build({Family::odd_cycle, {n}}));
  for (int k : {3, 4, 5, 6}) built.push_back(build({Family::gk_tight, {k}}));
  for (auto [m, n] : {std::pair{1, 3}, {3, 3}, {3, 5}, {5, 5}})
    built.push_back(build({Family::g_mn, {m, n}}));
  for (int k : {3, 4})
    for (int n : {4, 6}) {
      built.push_back(build({Family::small_component_m1, {n, k}}));
      built.push_back(build({Family::small_component_m2, {n, k}}));
    }
  built.push_back(build({Family::favaron_cutvertex, {2, 2}}));
  built.push_back(build({Family::favaron_cutvertex, {2, 4}}));
  built.push_back(build({Family::favaron_cutvertex, {4, 4}}));
  built.push_back(build({Family::favaron_cutvertex, {2, 2, 2}}));
  built.push_back(build({Family::kcut_bipartite_case, {4, 3}}));
  built.push_back(build({Family::kcut_bipartite_case, {4, 3, 0, 0}}));
  built.push_back(build({Family::kcut_bipartite_case, {5, 4, 0, 0, 1, 1}}));

  std::vector<SuiteItem> items;
  std::set<std::string> seen;
  for (const LabeledGraph& lg : built)
    if (seen.insert(canonical_graph6(lg.graph)).second) items.push_back({lg.name, lg.graph});

  FixtureSearchReport rep = join_fixture_search();
  for (const SuiteItem& f : rep.fixtures)
    if (seen.insert(canonical_graph6(f.graph)).second) items.push_back(f);
  if (fixture_report) *fixture_report = rep;
  return items;
}

/// All connected graphs up to isomorphism with 1..n vertices, graph6-named.
inline std::vector<SuiteItem> enumeration_suite(int n) {
  std::vector<SuiteItem> items;
  for (int k = 1; k <= n; ++k)
    for (const Graph& g : nonisomorphic_graphs(k, /*connected_only=*/true))
      items.push_back({emit_graph6(g), g});
  return items;
}

// ---------------------------------------------------------------------------
// Re-validation of fails certificates: parse the cited objects back and
// reproduce the violation with the core predicates. Rejects certificates
// whose objects no longer violate the statement.

namespace detail {

inline VertexSet json_vertex_set(const Json& j) {
  std::vector<Vertex> v;
  for (const auto& x : j) v.push_back(x.get<Vertex>());
  return VertexSet(std::move(v));
}

inline std::vector<Edge> json_edges(const Json& j) {
  std::vector<Edge> out;
  for (const auto& x : j) {
    std::string s = x.get<std::string>();
    auto dash = s.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("bad edge string: " + s);
    out.push_back(make_edge(std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))));
  }
  return out;
}

inline bool cited_cut_is_minimum(Analysis& a, const Json& cut_json, CutDecomposition& out) {
  VertexSet S = json_vertex_set(cut_json.at("S"));
  if (a.complete()) return false;
  if (S.size() != a.kappa()) return false;
  auto parts = components_without(a.graph(), S);
  if (parts.size() < 2) return false;
  out.S = S;
  out.k = S.size();
  out.parts = parts;
  return true;
}

inline bool is_minimal_isolating(const Graph& g, Vertex v, const Matching& m) {
  if (m.covers(v)) return false;
  for (Vertex w : g.neighbors(v))
    if (!m.covers(w)) return false;
  for (const auto& [x, y] : m.edges()) {
    bool meets = false;
    for (Vertex w : g.neighbors(v))
      if (w == x || w == y) meets = true;
    if (!meets) return false;
  }
  return true;
}

}  // namespace detail

inline bool revalidate_fails(const Graph& g, const Verdict& v) {
  if (v.status != Status::fails) return false;
  Analysis a(g);
  const Json& cert = v.certificate;
  try {
    switch (v.statement) {
      case Statement::isolating_remainder: {
        if (!detail::efc_hypothesis_gap(a, 2).empty()) return false;
        Vertex x = cert.at("v").get<Vertex>();
        Matching m = Matching::from_edges(g, detail::json_edges(cert.at("matching")));
        if (!detail::is_minimal_isolating(g, x, m)) return false;
        std::uint64_t cov = m.covered_mask() | (std::uint64_t{1} << x);
        return !subset_structural_randomly_matchable(g, g.full_mask() & ~cov);
      }
      case Statement::odd_component_remainder: {
        if (!detail::efc_hypothesis_gap(a, 2).empty()) return false;
        Matching m = Matching::from_edges(g, detail::json_edges(cert.at("matching")));
        VertexSet comp = detail::json_vertex_set(cert.at("component"));
        if (comp.size() % 2 == 0) return false;
        auto parts = components_without(g, m.covered());
        bool found = false;
        for (const auto& p : parts) found = found || p == comp;
        if (!found) return false;
        std::uint64_t rem = g.full_mask() & ~m.covered_mask() & ~comp.mask();
        return !subset_structural_randomly_matchable(g, rem);
      }
      case Statement::cut_cross_matching: {
        CutDecomposition cd;
        if (!detail::cited_cut_is_minimum(a, cert.at("cut"), cd)) return false;
        VertexSet H = detail::json_vertex_set(cert.at("H"));
        VertexSet X = detail::json_vertex_set(cert.at("X"));
        bool is_part = false;
        for (const auto& p : cd.parts) is_part = is_part || p == H;
        if (!is_part || !set_difference(X, cd.S).empty()) return false;
        Matching m = independent_edges_between(g, H, X);
        return m.size() < std::min(H.size(), X.size());
      }
      case Statement::two_component_split: {
        if (!detail::efc_hypothesis_gap(a, 2).empty()) return false;
        if (a.n() < 2 * a.kappa() + 3) return false;
        CutDecomposition cd;
        if (!detail::cited_cut_is_minimum(a, cert.at("cut"), cd)) return false;
        return cd.parts.size() != 2;
      }
      case Statement::component_count_bound: {
        if (!detail::efc_hypothesis_gap(a, 3).empty()) return false;
        CutDecomposition cd;
        if (!detail::cited_cut_is_minimum(a, cert.at("cut"), cd)) return false;
        return static_cast<int>(cd.parts.size()) > a.kappa();
      }
      case Statement::both_components_complete: {
        if (!detail::efc_hypothesis_gap(a, 3).empty()) return false;
        if (a.n() < 2 * a.kappa() + 3) return false;
        CutDecomposition cd;
        if (!detail::cited_cut_is_minimum(a, cert.at("cut"), cd)) return false;
        int big = 0;
        for (const auto& p : cd.parts)
          if (p.size() >= 3) ++big;
        if (big < 2) return false;
        if (cert.at("violation") == "component_count") return cd.parts.size() != 2;
        Vertex x = cert.at("nonadjacent_pair").at(0).get<Vertex>();
        Vertex y = cert.at("nonadjacent_pair").at(1).get<Vertex>();
        bool same_part = false;
        for (const auto& p : cd.parts) same_part = same_part || (p.contains(x) && p.contains(y));
        return same_part && !g.has_edge(x, y);
      }
      case Statement::triple_spans_edge: {
        if (!detail::efc_hypothesis_gap(a, 4).empty()) return false;
        if (a.n() < 2 * a.kappa() + 3) return false;
        CutDecomposition cd;
        if (!detail::cited_cut_is_minimum(a, cert.at("cut"), cd)) return false;
        if (cd.parts.size() != 2 || cd.parts[0].size() < 3 || cd.parts[1].size() < 3) return false;
        Vertex s = cert.at("triple").at(0).get<Vertex>();
        Vertex c = cert.at("triple").at(1).get<Vertex>();
        Vertex d = cert.at("triple").at(2).get<Vertex>();
        if (!cd.S.contains(s)) return false;
        bool split = (cd.parts[0].contains(c) && cd.parts[1].contains(d)) ||
                     (cd.parts[0].contains(d) && cd.parts[1].contains(c));
        return split && !g.has_edge(s, c) && !g.has_edge(s, d) && !g.has_edge(c, d);
      }
      case Statement::cut_internal_matching: {
        if (!detail::efc_hypothesis_gap(a, 3).empty()) return false;
        CutDecomposition cd;
        if (!detail::cited_cut_is_minimum(a, cert.at("cut"), cd)) return false;
        if (cd.parts.size() != 2) return false;
        for (const auto& p : cd.parts)
          if (!is_complete(induced(g, p))) return false;
        Vertex s = cert.at("s").get<Vertex>();
        if (!cd.S.contains(s)) return false;
        int k = a.kappa();
        int need = (k % 2 == 0) ? (k - 2) / 2 : (k - 3) / 2;
        VertexSet rest = cd.S;
        rest.erase(s);
        return matching_number(induced(g, rest)) < need;
      }
      case Statement::singleton_split:
      case Statement::pair_split: {
        std::string violation = cert.at("violation").get<std::string>();
        if (!detail::efc_hypothesis_gap(a, 2).empty()) return false;
        CutDecomposition cd;
        if (!detail::cited_cut_is_minimum(a, cert.at("cut"), cd)) return false;
        const int small = v.statement == Statement::singleton_split ? 1 : 2;
        const VertexSet* C = nullptr;
        bool has_small = false;
        for (const auto& p : cd.parts)
          if (p.size() >= a.kappa() && !C) C = &p;
        for (const auto& p : cd.parts)
          if (p.size() == small && (!C || !(p == *C))) has_small = true;
        if (!C || !has_small) return false;
        if (violation == "component_count") return cd.parts.size() != 2;
        if (violation == "no_saturating_matching") {
          bool any = false;
          EnumBudget b{1};
          detail::enumerate_saturating_cross(g, cd.S, C->mask(), b, [&](const auto&) {
            any = true;
            return false;
          });
          return !any;
        }
        Matching m = Matching::from_edges(g, detail::json_edges(cert.at("matching")));
        for (Vertex s : cd.S)
          if (!m.covers(s)) return false;
        for (const auto& [x, y] : m.edges()) {
          bool cross = (cd.S.contains(x) && C->contains(y)) || (cd.S.contains(y) && C->contains(x));
          if (!cross) return false;
        }
        std::uint64_t rem = C->mask() & ~m.covered_mask();
        if (v.statement == Statement::pair_split) {
          Vertex x = cert.at("x").get<Vertex>();
          if (!C->contains(x) || !m.covers(x)) return false;
          rem |= std::uint64_t{1} << x;
        }
        return !subset_structural_randomly_matchable(g, rem);
      }
      case Statement::cut_structure: {
        if (!detail::efc_hypothesis_gap(a, 3).empty()) return false;
        CutDecomposition cd;
        if (!detail::cited_cut_is_minimum(a, cert.at("cut"), cd)) return false;
        std::string violation = cert.at("violation").get<std::string>();
        if (violation == "component_count") return cd.parts.size() != 2;
        if (cd.parts.size() != 2) return false;
        const VertexSet& C = cd.parts[0].size() >= cd.parts[1].size() ? cd.parts[0] : cd.parts[1];
        bool s_edge = false;
        for (int i = 0; i < cd.S.size(); ++i)
          for (int j = i + 1; j < cd.S.size(); ++j)
            if (g.has_edge(cd.S[i], cd.S[j])) s_edge = true;
        if (violation == "case_A_component_incomplete") {
          if (!s_edge) return false;
          Vertex x = cert.at("nonadjacent_pair").at(0).get<Vertex>();
          Vertex y = cert.at("nonadjacent_pair").at(1).get<Vertex>();
          return C.contains(x) && C.contains(y) && !g.has_edge(x, y);
        }
        if (violation == "case_B_no_completion")
          return !s_edge && !detail::case_b_completion(g, cd.S, C).ok;
        return false;
      }
      // characterizations and alpha-based statements: recompute
      case Statement::cutvertex_characterization:
        return check_cutvertex_characterization(a).status == Status::fails;
      case Statement::two_cut_characterization:
        return check_two_cut_characterization(a).status == Status::fails;
      case Statement::alpha2_matchings:
        return check_alpha2_matchings(a).status == Status::fails;
      case Statement::odd_alpha2_structure:
        return check_odd_alpha2_structure(a).status == Status::fails;
      case Statement::alpha2_iff_efc:
        return check_alpha2_iff_efc(a).status == Status::fails;
      case Statement::complement_edge_equimatchable:
        return check_complement_edge_equimatchable(a).status == Status::fails;
      case Statement::knn_pair_removal: {
        Vertex x = cert.at("violating_pair").at(0).get<Vertex>();
        Vertex y = cert.at("violating_pair").at(1).get<Vertex>();
        if (g.has_edge(x, y)) return false;
        VertexSet keep = VertexSet::range(g.vertex_count());
        keep.erase(x);
        keep.erase(y);
        return is_randomly_matchable(induced(g, keep));
      }
    }
  } catch (const std::exception&) {
    return false;  // malformed certificate
  }
  return false;
}

}  // namespace matchkit
