// matchkit command line: analyze single graphs, construct the library's
// graph families, enumerate small graphs up to isomorphism, and run the
// statement-verification suites.
//
// Exit codes: 0 success / no fails, 1 verification found fails,
// 2 input or usage errors.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matchkit/matchkit.hpp"

namespace {

using namespace matchkit;

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return read_text_file(path);
}

std::vector<std::pair<std::string, Graph>> parse_input_graphs(const std::string& path,
                                                              const std::string& format) {
  std::vector<std::pair<std::string, Graph>> out;
  std::string text = read_input(path);
  std::string label = path.empty() || path == "-" ? "stdin" : path;
  if (format == "edgelist") {
    out.push_back({label, parse_edge_list(text)});
    return out;
  }
  // graph6: one graph per line
  std::size_t lineno = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line(text.data() + start,
                          (end == std::string::npos ? text.size() : end) - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    if (!line.empty()) {
      try {
        out.push_back({label + ":" + std::to_string(lineno), parse_graph6(line)});
      } catch (const parse_error& e) {
        throw parse_error(label + ": " + e.what(), lineno, 0);
      }
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (out.empty()) throw parse_error(label + ": no graphs in input", lineno, 0);
  return out;
}

std::string graph_output(const Graph& g, const std::string& format) {
  return format == "edgelist" ? emit_edge_list(g) : emit_graph6(g) + "\n";
}

Json roles_json(const LabeledGraph& lg) {
  Json roles = Json::object();
  for (const auto& [name, set] : lg.roles) roles[name] = vertex_set_json(set);
  return roles;
}

int cmd_analyze(const std::string& input, const std::string& format, bool json_out,
                bool with_verdicts, const HarnessOptions& opt) {
  auto graphs = parse_input_graphs(input, format);
  for (auto& [label, g] : graphs) {
    Analysis a(g);
    Json rep = analyze_report(label, a, opt, with_verdicts);
    if (json_out) {
      std::cout << rep.dump() << "\n";
    } else {
      std::cout << label << ": n=" << a.n() << " m=" << g.edge_count() << " nu=" << a.nu()
                << " def=" << a.def() << " alpha=" << a.alpha() << " kappa=" << a.kappa()
                << (a.equimatchable().equimatchable ? " equimatchable" : "")
                << (a.factor_critical() ? " factor-critical" : "")
                << (a.randomly_matchable() ? " randomly-matchable" : "")
                << (a.bipartite() ? " bipartite" : "") << (a.connected() ? "" : " disconnected")
                << "\n";
      if (!a.complete()) {
        std::cout << "  minimum cuts (k=" << a.kappa() << "): " << a.min_cuts().size() << "\n";
        for (const CutDecomposition& cd : a.min_cuts()) {
          std::cout << "    S={";
          for (int i = 0; i < cd.S.size(); ++i) std::cout << (i ? "," : "") << cd.S[i];
          std::cout << "} components:";
          for (const auto& p : cd.parts) std::cout << " " << p.size();
          std::cout << "\n";
        }
      }
      if (with_verdicts)
        for (const auto& vj : rep["verdicts"])
          std::cout << "  " << vj["statement"].get<std::string>() << ": "
                    << vj["status"].get<std::string>() << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& source, const std::string& arg, int jobs,
               const std::vector<std::string>& statements, bool ndjson, bool json_out,
               const HarnessOptions& opt) {
  std::vector<SuiteItem> items;
  FixtureSearchReport fixture_report;
  bool searched_fixtures = false;
  if (source == "constructions") {
    items = construction_suite(&fixture_report);
    searched_fixtures = true;
  } else if (source == "enumerate") {
    int n = std::stoi(arg);
    if (n < 1 || n > 7) {
      std::cerr << "error: exhaustive verification supports 1 <= n <= 7; "
                   "ingest larger graphs with --corpus\n";
      return kExitUsage;
    }
    items = enumeration_suite(n);
  } else {  // corpus
    for (auto& g : read_graph6_corpus(arg)) {
      std::string name = arg + ":" + std::to_string(items.size() + 1);
      items.push_back({name, std::move(g)});
    }
  }

  StatementFilter filter;
  if (!statements.empty()) {
    std::set<Statement> wanted;
    for (const std::string& name : statements) {
      bool known = false;
      for (Statement s : kSuiteStatements)
        if (name == statement_name(s)) {
          wanted.insert(s);
          known = true;
        }
      if (!known) {
        std::cerr << "error: unknown statement " << name << "\n";
        return kExitUsage;
      }
    }
    filter = std::move(wanted);
  }

  SuiteResult result = run_suite(items, opt, jobs, filter);

  if (ndjson) {
    for (const auto& [name, verdicts] : result.runs)
      for (const Verdict& v : verdicts) {
        Json line = to_json(v);
        line["graph"] = name;
        std::cout << line.dump() << "\n";
      }
    Json summary = suite_summary_json(result);
    if (searched_fixtures) {
      summary["fixture_search"] = Json::object();
      summary["fixture_search"]["candidates"] = fixture_report.candidates;
      summary["fixture_search"]["fixtures"] = static_cast<int>(fixture_report.fixtures.size());
    }
    summary["summary"] = true;
    std::cout << summary.dump() << "\n";
  } else if (json_out) {
    Json doc;
    doc["tool_version"] = kVersion;
    doc["graphs"] = static_cast<int>(items.size());
    Json runs = Json::array();
    for (const auto& [name, verdicts] : result.runs) {
      Json r;
      r["graph"] = name;
      Json vs = Json::array();
      for (const Verdict& v : verdicts) vs.push_back(to_json(v));
      r["verdicts"] = vs;
      runs.push_back(r);
    }
    doc["runs"] = runs;
    doc["summary"] = suite_summary_json(result);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "verified " << items.size() << " graphs\n";
    for (const auto& [s, c] : result.counts)
      std::cout << "  " << statement_name(s) << ": holds=" << c.holds << " fails=" << c.fails
                << " not_applicable=" << c.not_applicable
                << (c.bounded ? " bounded=" + std::to_string(c.bounded) : "") << "\n";
    if (searched_fixtures)
      std::cout << "fixture search: " << fixture_report.candidates << " candidates, "
                << fixture_report.fixtures.size() << " EFC fixtures\n";
    for (const auto& [name, verdicts] : result.runs)
      for (const Verdict& v : verdicts)
        if (v.status == Status::fails)
          std::cout << "FAIL " << name << " " << statement_name(v.statement) << " "
                    << v.certificate.dump() << "\n";
    std::cout << (result.total_fails == 0 ? "no fails" : "FAILS: " + std::to_string(result.total_fails))
              << "\n";
  }
  return result.total_fails == 0 ? kExitOk : kExitFails;
}

int cmd_construct(const std::string& family, const std::vector<int>& params,
                  const std::string& format, bool json_out, bool print_roles) {
  FamilySpec spec{family_from_name(family), params};
  LabeledGraph lg = build(spec);
  if (json_out) {
    Json doc;
    doc["family"] = family_name(spec.family);
    doc["name"] = lg.name;
    doc["n"] = lg.graph.vertex_count();
    doc["graph6"] = emit_graph6(lg.graph);
    doc["roles"] = roles_json(lg);
    std::cout << doc.dump() << "\n";
    return kExitOk;
  }
  std::cout << graph_output(lg.graph, format);
  if (print_roles) std::cout << roles_json(lg).dump() << "\n";
  return kExitOk;
}

int cmd_enumerate(int n, bool efc, bool equimatchable_only, bool factor_critical_only,
                  int kappa_filter) {
  if (n < 1 || n > 7) {
    std::cerr << "error: exhaustive enumeration supports 1 <= n <= 7; "
                 "use --corpus ingestion for larger graphs\n";
    return kExitUsage;
  }
  for (const Graph& g : nonisomorphic_graphs(n, /*connected_only=*/true)) {
    if (kappa_filter >= 0 && vertex_connectivity(g) != kappa_filter) continue;
    if ((efc || equimatchable_only) && !is_equimatchable(g).equimatchable) continue;
    if ((efc || factor_critical_only) && !is_factor_critical(g)) continue;
    std::cout << emit_graph6(g) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matchkit: matchings, cuts, and statement verification on small graphs"};
  app.require_subcommand(1);

  HarnessOptions opt;
  std::string format = "edgelist";
  int jobs = 1;
  long budget_ms = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--jobs", jobs, "parallel workers")->envname("MATCHKIT_JOBS");
    sub->add_option("--budget-ms", budget_ms, "wall-clock cap per enumeration (marks verdicts bounded)")
        ->envname("MATCHKIT_BUDGET_MS");
  };

  // analyze
  std::string analyze_input = "-";
  bool analyze_json = false, analyze_no_verdicts = false;
  CLI::App* analyze = app.add_subcommand("analyze", "full property report for input graphs");
  analyze->add_option("input", analyze_input, "path or - for stdin");
  analyze->add_option("--format", format, "graph6 or edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->envname("MATCHKIT_FORMAT");
  analyze->add_flag("--json", analyze_json, "one JSON document per graph");
  analyze->add_flag("--no-verdicts", analyze_no_verdicts, "skip the statement checkers");
  add_common(analyze);

  // verify
  std::string corpus_path;
  int enumerate_n = 0;
  bool use_constructions = false, verify_ndjson = false, verify_json = false;
  std::vector<std::string> statements;
  CLI::App* verify = app.add_subcommand("verify", "run the statement checkers over a graph source");
  verify->add_flag("--constructions", use_constructions, "verify the built-in construction families");
  verify->add_option("--enumerate", enumerate_n, "verify all connected graphs up to isomorphism, n <= 7");
  verify->add_option("--corpus", corpus_path, "verify a graph6 corpus file (.g6 or .g6.gz)");
  verify->add_option("--statement", statements, "restrict to named statements (repeatable)");
  verify->add_flag("--ndjson", verify_ndjson, "stream one verdict JSON per line");
  verify->add_flag("--json", verify_json, "single JSON document");
  add_common(verify);

  // construct
  std::string family;
  std::vector<int> params;
  int p_k = -1, p_m = -1, p_n = -1;
  std::string construct_format = "graph6";
  bool construct_json = false, construct_roles = false;
  CLI::App* construct = app.add_subcommand("construct", "emit a graph family instance");
  construct->add_option("--family", family, "family name")->required();
  construct->add_option("--params", params, "raw family parameters");
  construct->add_option("--k", p_k, "connectivity parameter");
  construct->add_option("--m", p_m, "first component size");
  construct->add_option("--n", p_n, "second component size / independent set size");
  construct->add_option("--format", construct_format, "graph6 or edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->envname("MATCHKIT_FORMAT");
  construct->add_flag("--json", construct_json, "JSON document with graph and role map");
  construct->add_flag("--roles", construct_roles, "print the role map after the graph");

  // enumerate
  int enum_n = 0;
  bool enum_efc = false, enum_em = false, enum_fc = false;
  int enum_kappa = -1;
  CLI::App* enumerate = app.add_subcommand("enumerate", "connected graphs up to isomorphism, graph6 stream");
  enumerate->add_option("n", enum_n, "vertex count (<= 7)")->required();
  enumerate->add_flag("--efc", enum_efc, "only equimatchable factor-critical graphs");
  enumerate->add_flag("--equimatchable", enum_em, "only equimatchable graphs");
  enumerate->add_flag("--factor-critical", enum_fc, "only factor-critical graphs");
  enumerate->add_option("--kappa", enum_kappa, "only graphs with this vertex connectivity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (budget_ms > 0) opt.budget_ms = std::chrono::milliseconds(budget_ms);

  try {
    if (*analyze)
      return cmd_analyze(analyze_input, format, analyze_json, !analyze_no_verdicts, opt);
    if (*verify) {
      int sources = (use_constructions ? 1 : 0) + (enumerate_n > 0 ? 1 : 0) +
                    (!corpus_path.empty() ? 1 : 0);
      if (sources != 1) {
        std::cerr << "error: choose exactly one of --constructions, --enumerate, --corpus\n";
        return kExitUsage;
      }
      std::string source = use_constructions ? "constructions"
                           : enumerate_n > 0 ? "enumerate"
                                             : "corpus";
      std::string arg = use_constructions ? "" : enumerate_n > 0 ? std::to_string(enumerate_n) : corpus_path;
      return cmd_verify(source, arg, jobs, statements, verify_ndjson, verify_json, opt);
    }
    if (*construct) {
      std::vector<int> p = params;
      if (p.empty()) {
        Family f = family_from_name(family);
        if (f == Family::gk_tight && p_k > 0) p = {p_k};
        if (f == Family::g_mn && p_m > 0 && p_n > 0) p = {p_m, p_n};
        if ((f == Family::small_component_m1 || f == Family::small_component_m2) && p_n > 0 && p_k > 0)
          p = {p_n, p_k};
        if (f == Family::complete && p_n > 0) p = {p_n};
        if (f == Family::complete_bipartite && p_m > 0 && p_n > 0) p = {p_m, p_n};
        if (f == Family::odd_cycle && p_n > 0) p = {p_n};
      }
      return cmd_construct(family, p, construct_format, construct_json, construct_roles);
    }
    if (*enumerate) return cmd_enumerate(enum_n, enum_efc, enum_em, enum_fc, enum_kappa);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
