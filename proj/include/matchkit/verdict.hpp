#pragma once

#include <chrono>
#include <string>

#include <json.hpp>

#include "matchkit/graph.hpp"
#include "matchkit/matching.hpp"

namespace matchkit {

using Json = nlohmann::ordered_json;

/// The checkable statements, named by what they verify.
enum class Statement {
  isolating_remainder,         // remainder after a minimal isolating matching
  odd_component_remainder,     // remainder after matching + odd component
  cut_cross_matching,          // min(|H|,|X|) independent edges across a cut
  singleton_split,             // cut with a singleton and a large component
  two_component_split,         // min cuts of large EFC graphs split in two
  pair_split,                  // cut with a 2-vertex and a large component
  cut_structure,               // complete / completable-bipartite dichotomy
  both_components_complete,    // two components >= 3 are complete
  component_count_bound,       // min cut leaves at most k components
  cutvertex_characterization,  // connectivity-1 EFC characterization
  two_cut_characterization,    // connectivity-2 EFC characterization
  alpha2_matchings,            // matchings of graphs with alpha = 2
  odd_alpha2_structure,        // structure of odd graphs with alpha = 2
  cut_internal_matching,       // near-perfect matching inside the cut
  triple_spans_edge,           // cut/component triples span an edge
  alpha2_iff_efc,              // alpha <= 2 equivalent to EFC
  complement_edge_equimatchable,  // alpha <= 2 iff EFC and G+e equimatchable
  knn_pair_removal,            // removing two vertices of K_{n,n}
};

inline constexpr Statement kSuiteStatements[] = {
    Statement::isolating_remainder,
    Statement::odd_component_remainder,
    Statement::cut_cross_matching,
    Statement::singleton_split,
    Statement::two_component_split,
    Statement::pair_split,
    Statement::cut_structure,
    Statement::both_components_complete,
    Statement::component_count_bound,
    Statement::cutvertex_characterization,
    Statement::two_cut_characterization,
    Statement::alpha2_matchings,
    Statement::odd_alpha2_structure,
    Statement::cut_internal_matching,
    Statement::triple_spans_edge,
    Statement::alpha2_iff_efc,
    Statement::complement_edge_equimatchable,
};

inline const char* statement_name(Statement s) {
  switch (s) {
    case Statement::isolating_remainder: return "isolating_remainder";
    case Statement::odd_component_remainder: return "odd_component_remainder";
    case Statement::cut_cross_matching: return "cut_cross_matching";
    case Statement::singleton_split: return "singleton_split";
    case Statement::two_component_split: return "two_component_split";
    case Statement::pair_split: return "pair_split";
    case Statement::cut_structure: return "cut_structure";
    case Statement::both_components_complete: return "both_components_complete";
    case Statement::component_count_bound: return "component_count_bound";
    case Statement::cutvertex_characterization: return "cutvertex_characterization";
    case Statement::two_cut_characterization: return "two_cut_characterization";
    case Statement::alpha2_matchings: return "alpha2_matchings";
    case Statement::odd_alpha2_structure: return "odd_alpha2_structure";
    case Statement::cut_internal_matching: return "cut_internal_matching";
    case Statement::triple_spans_edge: return "triple_spans_edge";
    case Statement::alpha2_iff_efc: return "alpha2_iff_efc";
    case Statement::complement_edge_equimatchable: return "complement_edge_equimatchable";
    case Statement::knn_pair_removal: return "knn_pair_removal";
  }
  return "unknown";
}

enum class Status { holds, fails, not_applicable };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::not_applicable: return "not_applicable";
  }
  return "unknown";
}

/// Outcome of one statement check on one graph. A fails verdict carries a
/// violating object re-checkable by the core modules; a not_applicable
/// verdict names the failed hypothesis. `bounded` marks verdicts whose inner
/// enumeration hit a budget cap, so "holds" covers only the explored part.
struct Verdict {
  Statement statement;
  Status status;
  Json certificate;
  bool bounded = false;
  std::chrono::microseconds elapsed{0};
};

inline Json vertex_set_json(const VertexSet& s) {
  Json a = Json::array();
  for (Vertex v : s) a.push_back(v);
  return a;
}

inline Json matching_json(const Matching& m) {
  Json a = Json::array();
  for (const auto& p : m.pair_list()) a.push_back(p);
  return a;
}

/// Serialization omits elapsed time so reports are byte-stable across runs.
inline Json to_json(const Verdict& v) {
  Json j;
  j["statement"] = statement_name(v.statement);
  j["status"] = status_name(v.status);
  if (v.bounded) j["bounded"] = true;
  j["certificate"] = v.certificate;
  return j;
}

}  // namespace matchkit
