#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "matchkit/matchkit.hpp"

using namespace matchkit;

namespace {

Analysis analysis_of(const Graph& g) { return Analysis(g); }

// (K_a u K_b) fully joined to a graph on the cut set; the shape used by the
// fixture search
Graph join_fixture(const Graph& cut_graph, int a, int b) {
  const int k = cut_graph.vertex_count();
  std::vector<Edge> edges = cut_graph.edges();
  const int c0 = k, d0 = k + a, total = k + a + b;
  for (int u = c0; u < d0; ++u)
    for (int v = u + 1; v < d0; ++v) edges.push_back({u, v});
  for (int u = d0; u < total; ++u)
    for (int v = u + 1; v < total; ++v) edges.push_back({u, v});
  for (int s = 0; s < k; ++s)
    for (int v = c0; v < total; ++v) edges.push_back({s, v});
  return Graph::from_edges(total, edges);
}

}  // namespace

TEST_CASE("isolating remainder checker", "[checkers]") {
  Analysis c7 = analysis_of(Graph::cycle(7));
  CHECK(check_isolating_remainder(c7).status == Status::holds);

  Analysis k4 = analysis_of(Graph::complete(4));
  Verdict v = check_isolating_remainder(k4);
  CHECK(v.status == Status::not_applicable);
  CHECK(v.certificate["hypothesis"] == "not factor-critical");

  Analysis gmn = analysis_of(build({Family::g_mn, {3, 3}}).graph);
  CHECK(check_isolating_remainder(gmn).status == Status::holds);
}

TEST_CASE("odd component remainder checker", "[checkers]") {
  Analysis c7 = analysis_of(Graph::cycle(7));
  CHECK(check_odd_component_remainder(c7).status == Status::holds);

  Analysis p4 = analysis_of(Graph::path(4));
  CHECK(check_odd_component_remainder(p4).status == Status::not_applicable);

  Analysis gmn = analysis_of(build({Family::g_mn, {3, 3}}).graph);
  HarnessOptions capped;
  capped.matching_size_cap = 4;
  CHECK(check_odd_component_remainder(gmn, capped).status == Status::holds);
}

TEST_CASE("cut cross matching checker", "[checkers]") {
  Analysis pet = analysis_of(testutil::petersen());
  CHECK(check_cut_cross_matching(pet).status == Status::holds);

  Analysis k5 = analysis_of(Graph::complete(5));
  CHECK(check_cut_cross_matching(k5).status == Status::not_applicable);

  Analysis g4 = analysis_of(build({Family::gk_tight, {4}}).graph);
  CHECK(check_cut_cross_matching(g4).status == Status::holds);
}

TEST_CASE("singleton split checker", "[checkers]") {
  Analysis m1 = analysis_of(build({Family::small_component_m1, {4, 3}}).graph);
  CHECK(check_singleton_split(m1).status == Status::holds);

  // C_5: minimum cuts give parts of sizes 2 and 1 with k = 2, so the
  // hypotheses resolve mechanically to applicable
  Analysis c5 = analysis_of(Graph::cycle(5));
  CHECK(check_singleton_split(c5).status == Status::holds);

  Analysis k34 = analysis_of(Graph::complete_bipartite(3, 4));
  Verdict v = check_singleton_split(k34);
  CHECK(v.status == Status::not_applicable);
  CHECK(v.certificate["hypothesis"] == "not factor-critical");
}

TEST_CASE("two component split checker", "[checkers]") {
  Analysis g35 = analysis_of(build({Family::g_mn, {3, 5}}).graph);  // n = 11 >= 2*3+3
  CHECK(check_two_component_split(g35).status == Status::holds);

  Analysis g3 = analysis_of(build({Family::gk_tight, {3}}).graph);  // n = 7 < 9
  Verdict v = check_two_component_split(g3);
  CHECK(v.status == Status::not_applicable);
  CHECK(v.certificate["hypothesis"] == "fewer than 2k+3 vertices");

  Analysis c9 = analysis_of(Graph::cycle(9));
  Verdict w = check_two_component_split(c9);
  CHECK(w.status == Status::not_applicable);
  CHECK(w.certificate["hypothesis"] == "not equimatchable");
}

TEST_CASE("pair split checker", "[checkers]") {
  Analysis m2 = analysis_of(build({Family::small_component_m2, {4, 3}}).graph);
  CHECK(check_pair_split(m2).status == Status::holds);

  Analysis gmn = analysis_of(build({Family::g_mn, {3, 3}}).graph);
  Verdict v = check_pair_split(gmn);
  CHECK(v.status == Status::not_applicable);  // no 2-vertex component
}

TEST_CASE("cut structure checker distinguishes the two cases", "[checkers]") {
  Analysis m2 = analysis_of(build({Family::small_component_m2, {4, 3}}).graph);
  Verdict b = check_cut_structure(m2);
  REQUIRE(b.status == Status::holds);
  REQUIRE(b.certificate["cuts"].size() >= 1);
  CHECK(b.certificate["cuts"][0]["case"] == "B");

  // independent cut with an edge: (K_4 u K_2) joined to K_2 u K_1
  Graph s_graph = Graph::from_edges(3, {{0, 1}});
  Analysis case_a = analysis_of(join_fixture(s_graph, 4, 2));
  REQUIRE(case_a.efc());
  Verdict va = check_cut_structure(case_a);
  REQUIRE(va.status == Status::holds);
  bool saw_case_a = false;
  for (const auto& rep : va.certificate["cuts"]) saw_case_a |= rep["case"] == "A";
  CHECK(saw_case_a);

  Analysis gmn = analysis_of(build({Family::g_mn, {3, 3}}).graph);
  CHECK(check_cut_structure(gmn).status == Status::not_applicable);
}

TEST_CASE("both components complete checker", "[checkers]") {
  Analysis g35 = analysis_of(build({Family::g_mn, {3, 5}}).graph);
  CHECK(check_both_components_complete(g35).status == Status::holds);

  Analysis g55 = analysis_of(build({Family::g_mn, {5, 5}}).graph);
  CHECK(check_both_components_complete(g55).status == Status::holds);
}

TEST_CASE("component count bound checker and tightness", "[checkers]") {
  Analysis g3 = analysis_of(build({Family::gk_tight, {3}}).graph);
  Verdict v3 = check_component_count_bound(g3);
  CHECK(v3.status == Status::holds);
  CHECK(v3.certificate["max_components"] == 3);

  Analysis g5 = analysis_of(build({Family::gk_tight, {5}}).graph);
  Verdict v5 = check_component_count_bound(g5);
  CHECK(v5.status == Status::holds);
  CHECK(v5.certificate["max_components"] == 5);

  Analysis gmn = analysis_of(build({Family::g_mn, {3, 3}}).graph);
  Verdict vm = check_component_count_bound(gmn);
  CHECK(vm.status == Status::holds);
  CHECK(vm.certificate["max_components"] == 2);
}

TEST_CASE("cut-vertex characterization checker", "[checkers]") {
  Analysis bowtie = analysis_of(build({Family::favaron_cutvertex, {2, 2}}).graph);
  Verdict v = check_cutvertex_characterization(bowtie);
  CHECK(v.status == Status::holds);
  CHECK(v.certificate["efc"] == true);

  Analysis p5 = analysis_of(Graph::path(5));
  Verdict w = check_cutvertex_characterization(p5);
  CHECK(w.status == Status::holds);  // both sides false: consistent
  CHECK(w.certificate["efc"] == false);
  CHECK(w.certificate["conditions"] == false);

  Analysis c6 = analysis_of(Graph::cycle(6));
  CHECK(check_cutvertex_characterization(c6).status == Status::not_applicable);
}

TEST_CASE("two-cut characterization checker", "[checkers]") {
  Analysis c5 = analysis_of(Graph::cycle(5));
  CHECK(check_two_cut_characterization(c5).status == Status::holds);

  Analysis c7 = analysis_of(Graph::cycle(7));
  CHECK(check_two_cut_characterization(c7).status == Status::holds);

  Analysis gmn = analysis_of(build({Family::g_mn, {3, 3}}).graph);
  CHECK(check_two_cut_characterization(gmn).status == Status::not_applicable);
}

TEST_CASE("independence-two matchings checker", "[checkers]") {
  Analysis c5 = analysis_of(Graph::cycle(5));
  Verdict v = check_alpha2_matchings(c5);
  CHECK(v.status == Status::holds);
  CHECK(v.certificate["branch"] == "odd");

  // K_4 minus an edge: alpha = 2, even, randomly matchable
  Graph k4e = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  Analysis a(k4e);
  Verdict w = check_alpha2_matchings(a);
  CHECK(w.status == Status::holds);
  CHECK(w.certificate["branch"] == "even_randomly_matchable");

  // P_4: alpha = 2, even, not equimatchable, perfect matching, exposure <= 2
  Analysis p4 = analysis_of(Graph::path(4));
  Verdict u = check_alpha2_matchings(p4);
  CHECK(u.status == Status::holds);
  CHECK(u.certificate["branch"] == "even_not_equimatchable");
  CHECK(u.certificate["max_exposed"] == 2);

  Analysis c7 = analysis_of(Graph::cycle(7));
  CHECK(check_alpha2_matchings(c7).status == Status::not_applicable);  // alpha = 3
}

TEST_CASE("odd independence-two structure checker", "[checkers]") {
  Analysis c5 = analysis_of(Graph::cycle(5));
  Verdict v = check_odd_alpha2_structure(c5);
  CHECK(v.status == Status::holds);
  CHECK(v.certificate["branch"] == "factor_critical");

  // cut-vertex structure: 0 dominates the K_2 component {1,2}; {3,4} is the
  // other complete component reached through 0-3 only
  Graph g = Graph::from_edges(5, {{1, 2}, {0, 1}, {0, 2}, {3, 4}, {0, 3}});
  Analysis a(g);
  REQUIRE(a.alpha() == 2);
  Verdict w = check_odd_alpha2_structure(a);
  CHECK(w.status == Status::holds);
  CHECK(w.certificate["branch"] == "cutvertex_structure");

  Analysis c7 = analysis_of(Graph::cycle(7));
  CHECK(check_odd_alpha2_structure(c7).status == Status::not_applicable);
}

TEST_CASE("cut internal matching checker", "[checkers]") {
  // k = 3 odd: the empty matching leaves |S| = 3 vertices uncovered
  Analysis gmn = analysis_of(build({Family::g_mn, {3, 3}}).graph);
  CHECK(check_cut_internal_matching(gmn).status == Status::holds);

  // k = 4 even: needs one edge inside S - s for every s; the 4-cycle cut has it
  Analysis c4cut = analysis_of(join_fixture(Graph::cycle(4), 3, 4));
  REQUIRE(c4cut.efc());
  CHECK(check_cut_internal_matching(c4cut).status == Status::holds);

  Analysis k5 = analysis_of(Graph::complete(5));
  CHECK(check_cut_internal_matching(k5).status == Status::not_applicable);
}

TEST_CASE("triple spans edge checker", "[checkers]") {
  // 3-connected instances stay below the k >= 4 hypothesis
  Analysis g55 = analysis_of(build({Family::g_mn, {5, 5}}).graph);
  Verdict v = check_triple_spans_edge(g55);
  CHECK(v.status == Status::not_applicable);

  Analysis fixture = analysis_of(join_fixture(Graph::cycle(4), 3, 4));
  REQUIRE(fixture.kappa() == 4);
  REQUIRE(fixture.efc());
  CHECK(check_triple_spans_edge(fixture).status == Status::holds);
}

TEST_CASE("independence-two iff EFC checker", "[checkers]") {
  // both sides true
  Analysis fixture = analysis_of(join_fixture(Graph::cycle(4), 3, 4));
  Verdict v = check_alpha2_iff_efc(fixture);
  CHECK(v.status == Status::holds);
  CHECK(v.certificate["efc"] == true);

  // both sides false: independent cut forces alpha = 4 and breaks EFC
  Analysis indep = analysis_of(join_fixture(Graph::empty(4), 3, 4));
  REQUIRE(indep.kappa() == 4);
  Verdict w = check_alpha2_iff_efc(indep);
  CHECK(w.status == Status::holds);
  CHECK(w.certificate["efc"] == false);
  CHECK(w.certificate["alpha"].get<int>() > 2);

  Analysis gmn = analysis_of(build({Family::g_mn, {3, 3}}).graph);  // k = 3
  CHECK(check_alpha2_iff_efc(gmn).status == Status::not_applicable);
}

TEST_CASE("complement edge equimatchability checker", "[checkers]") {
  Analysis c5 = analysis_of(Graph::cycle(5));
  Verdict v = check_complement_edge_equimatchable(c5);
  CHECK(v.status == Status::holds);
  CHECK(v.certificate["rhs"] == true);

  // C_7: alpha = 3, EFC, so some complement edge must break equimatchability
  Analysis c7 = analysis_of(Graph::cycle(7));
  Verdict w = check_complement_edge_equimatchable(c7);
  CHECK(w.status == Status::holds);
  CHECK(w.certificate["rhs"] == false);
  CHECK(w.certificate.contains("witness_edge"));

  // K_5: complement empty, right side vacuously true, alpha = 1
  Analysis k5 = analysis_of(Graph::complete(5));
  Verdict u = check_complement_edge_equimatchable(k5);
  CHECK(u.status == Status::holds);
  CHECK(u.certificate["complement_edges_scanned"] == 0);

  // C_9: alpha = 4 and C_9 is not equimatchable, so both sides are false
  Analysis c9 = analysis_of(Graph::cycle(9));
  Verdict t = check_complement_edge_equimatchable(c9);
  CHECK(t.status == Status::holds);
  CHECK(t.certificate["rhs"] == false);
}

TEST_CASE("suite runner aggregates deterministically", "[checkers]") {
  std::vector<SuiteItem> items;
  for (int n : {5, 7}) items.push_back({"cycle", Graph::cycle(n)});
  items.push_back({"gmn", build({Family::g_mn, {3, 3}}).graph});
  SuiteResult a = run_suite(items, {}, 1);
  SuiteResult b = run_suite(items, {}, 3);
  CHECK(a.total_fails == 0);
  CHECK(suite_summary_json(a).dump() == suite_summary_json(b).dump());
  // per-item verdicts identical across job counts
  for (std::size_t i = 0; i < a.runs.size(); ++i) {
    REQUIRE(a.runs[i].second.size() == b.runs[i].second.size());
    for (std::size_t j = 0; j < a.runs[i].second.size(); ++j)
      CHECK(to_json(a.runs[i].second[j]).dump() == to_json(b.runs[i].second[j]).dump());
  }
}

TEST_CASE("statement filter restricts the run", "[checkers]") {
  std::vector<SuiteItem> items{{"c5", Graph::cycle(5)}};
  StatementFilter filter = std::set<Statement>{Statement::alpha2_matchings};
  SuiteResult r = run_suite(items, {}, 1, filter);
  REQUIRE(r.runs[0].second.size() == 1);
  CHECK(r.runs[0].second[0].statement == Statement::alpha2_matchings);
}

TEST_CASE("fixture search finds EFC join fixtures", "[checkers]") {
  FixtureSearchReport rep = join_fixture_search();
  CHECK(rep.candidates > 100);
  CHECK(!rep.fixtures.empty());
  for (const SuiteItem& f : rep.fixtures) {
    Analysis a(f.graph);
    CHECK(a.efc());
  }
}

TEST_CASE("corrupted fails certificates are rejected on revalidation", "[checkers]") {
  // manufacture a certificate for the cross-matching statement on the
  // Petersen graph, then corrupt it in several ways
  Graph pet = testutil::petersen();
  Verdict fake{Statement::cut_cross_matching, Status::fails, Json::object()};
  fake.certificate["cut"] = Json::object();
  fake.certificate["cut"]["S"] = Json::array({0, 1, 2});  // not a cut at all
  fake.certificate["H"] = Json::array({5, 6});
  fake.certificate["X"] = Json::array({0, 1});
  CHECK_FALSE(revalidate_fails(pet, fake));

  // a real minimum cut, but the cited sets do not violate the bound
  auto cuts = minimum_vertex_cuts(pet);
  REQUIRE(!cuts.empty());
  fake.certificate["cut"]["S"] = vertex_set_json(cuts[0].S);
  fake.certificate["H"] = vertex_set_json(cuts[0].parts[0]);
  fake.certificate["X"] = vertex_set_json(cuts[0].S);
  CHECK_FALSE(revalidate_fails(pet, fake));

  // verdicts that are not fails never revalidate
  Verdict holds_v{Statement::cut_cross_matching, Status::holds, Json::object()};
  CHECK_FALSE(revalidate_fails(pet, holds_v));

  // malformed payloads are rejected, not thrown
  Verdict garbage{Statement::isolating_remainder, Status::fails, Json::object()};
  garbage.certificate["v"] = "not-a-number";
  CHECK_FALSE(revalidate_fails(pet, garbage));

  // a violating triple certificate on a graph whose hypotheses fail
  Verdict triple{Statement::triple_spans_edge, Status::fails, Json::object()};
  triple.certificate["cut"] = Json::object();
  triple.certificate["cut"]["S"] = Json::array({0, 1, 2, 3});
  triple.certificate["triple"] = Json::array({0, 4, 8});
  CHECK_FALSE(revalidate_fails(pet, triple));
}

TEST_CASE("revalidation accepts a certificate whose objects do violate", "[checkers]") {
  // the pair-removal revalidator checks the violation mechanics directly:
  // a non-adjacent pair whose removal leaves a randomly matchable graph
  Graph p4 = Graph::path(4);
  Verdict v{Statement::knn_pair_removal, Status::fails, Json::object()};
  v.certificate["violating_pair"] = Json::array({0, 3});
  CHECK(revalidate_fails(p4, v));  // P_4 - {0,3} = K_2, and 0,3 non-adjacent
  v.certificate["violating_pair"] = Json::array({0, 1});
  CHECK_FALSE(revalidate_fails(p4, v));  // adjacent pair: no violation
}

TEST_CASE("isolating remainder certificates bind to the cited matching", "[checkers]") {
  // C_7 holds, so any certificate claiming a violation must be rejected;
  // check both a well-formed minimal isolating matching and a corrupted one
  Graph c7 = Graph::cycle(7);
  Verdict v{Statement::isolating_remainder, Status::fails, Json::object()};
  v.certificate["v"] = 0;
  v.certificate["matching"] = Json::array({"1-2", "5-6"});  // genuinely isolates 0
  CHECK_FALSE(revalidate_fails(c7, v));                     // remainder is CRM: no violation
  v.certificate["matching"] = Json::array({"2-3", "5-6"});  // does not isolate 0
  CHECK_FALSE(revalidate_fails(c7, v));
}
