#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "matchkit/enumerate.hpp"
#include "matchkit/io.hpp"

using namespace matchkit;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& stdin_data = "") {
  std::string in_path = std::tmpnam(nullptr);
  std::string out_path = std::tmpnam(nullptr);
  {
    std::ofstream f(in_path, std::ios::binary);
    f << stdin_data;
  }
  std::string cmd = std::string(MATCHKIT_CLI_PATH) + " " + args + " < " + in_path + " > " +
                    out_path + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream f(out_path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  r.out = ss.str();
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());
  return r;
}

std::string write_temp(const std::string& contents, const std::string& suffix) {
  std::string path = std::string(std::tmpnam(nullptr)) + suffix;
  std::ofstream f(path, std::ios::binary);
  f << contents;
  return path;
}

}  // namespace

TEST_CASE("analyze reports the cycle properties", "[cli]") {
  RunResult r = run_cli("analyze -", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("nu=2") != std::string::npos);
  CHECK(r.out.find("alpha=2") != std::string::npos);
  CHECK(r.out.find("kappa=2") != std::string::npos);
  CHECK(r.out.find("equimatchable") != std::string::npos);
  CHECK(r.out.find("factor-critical") != std::string::npos);
}

TEST_CASE("analyze handles graph6 input", "[cli]") {
  std::string code = emit_graph6(Graph::complete_bipartite(3, 3));
  RunResult r = run_cli("analyze - --format graph6 --json", code + "\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"randomly_matchable\":true") != std::string::npos);
}

TEST_CASE("analyze rejects empty input", "[cli]") {
  RunResult r = run_cli("analyze -", "");
  CHECK(r.exit_code == 2);
}

TEST_CASE("analyze output is byte-stable across runs", "[cli]") {
  std::string input = "7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n";
  RunResult a = run_cli("analyze - --json", input);
  RunResult b = run_cli("analyze - --json", input);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("construct emits the expected family instances", "[cli]") {
  RunResult r = run_cli("construct --family Gk --k 4");
  REQUIRE(r.exit_code == 0);
  std::string line = r.out.substr(0, r.out.find('\n'));
  CHECK(parse_graph6(line).vertex_count() == 9);

  RunResult s = run_cli("construct --family Gmn --m 3 --n 5");
  REQUIRE(s.exit_code == 0);
  line = s.out.substr(0, s.out.find('\n'));
  CHECK(parse_graph6(line).vertex_count() == 11);

  RunResult bad = run_cli("construct --family Gmn --m 2 --n 3");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("odd") != std::string::npos);
}

TEST_CASE("construct can emit role maps and edge lists", "[cli]") {
  RunResult r = run_cli("construct --family Gk --k 3 --json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("\"roles\"") != std::string::npos);
  CHECK(r.out.find("\"S\":[0,1,2]") != std::string::npos);

  RunResult s = run_cli("construct --family odd_cycle --params 5 --format edgelist");
  REQUIRE(s.exit_code == 0);
  CHECK(parse_edge_list(s.out) == Graph::cycle(5));
}

TEST_CASE("enumerate streams the connected census", "[cli]") {
  RunResult r = run_cli("enumerate 3");
  REQUIRE(r.exit_code == 0);
  std::istringstream ss(r.out);
  std::string line;
  int count = 0;
  while (std::getline(ss, line))
    if (!line.empty()) {
      Graph g = parse_graph6(line);
      CHECK(g.vertex_count() == 3);
      CHECK(is_connected(g));
      ++count;
    }
  CHECK(count == 2);  // the path and the triangle
}

TEST_CASE("enumerate applies the EFC filter", "[cli]") {
  RunResult r = run_cli("enumerate 5 --efc");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find(canonical_graph6(Graph::cycle(5))) != std::string::npos);
  CHECK(r.out.find(canonical_graph6(Graph::complete(5))) != std::string::npos);
}

TEST_CASE("enumerate rejects large vertex counts", "[cli]") {
  RunResult r = run_cli("enumerate 9");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("corpus") != std::string::npos);
}

TEST_CASE("verify runs a corpus and surfaces bad lines", "[cli]") {
  std::string good = write_temp(emit_graph6(Graph::cycle(5)) + "\n" +
                                    emit_graph6(Graph::complete(4)) + "\n",
                                ".g6");
  RunResult r = run_cli("verify --corpus " + good);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("no fails") != std::string::npos);
  std::remove(good.c_str());

  RunResult missing = run_cli("verify --corpus /nonexistent/missing.g6");
  CHECK(missing.exit_code == 2);

  std::string bad = write_temp("d?!!corrupted\n", ".g6");
  RunResult corrupted = run_cli("verify --corpus " + bad);
  CHECK(corrupted.exit_code == 2);
  CHECK(corrupted.out.find("line 1") != std::string::npos);
  std::remove(bad.c_str());
}

TEST_CASE("verify enumerate emits NDJSON with a trailing summary", "[cli]") {
  RunResult r = run_cli("verify --enumerate 4 --ndjson --jobs 2");
  REQUIRE(r.exit_code == 0);
  std::istringstream ss(r.out);
  std::string line, last;
  int lines = 0;
  while (std::getline(ss, line))
    if (!line.empty()) {
      last = line;
      ++lines;
    }
  CHECK(lines == 6 * 17 + 1);  // six graphs, all checkers, one summary
  CHECK(last.find("\"summary\":true") != std::string::npos);
  CHECK(last.find("\"total_fails\":0") != std::string::npos);
}

TEST_CASE("verify statement filter and usage errors", "[cli]") {
  RunResult r = run_cli("verify --enumerate 4 --statement alpha2_matchings --ndjson");
  REQUIRE(r.exit_code == 0);
  std::istringstream ss(r.out);
  std::string line;
  int verdicts = 0;
  while (std::getline(ss, line))
    if (line.find("\"statement\":\"alpha2_matchings\"") != std::string::npos) ++verdicts;
  CHECK(verdicts == 6);

  CHECK(run_cli("verify --enumerate 4 --statement bogus").exit_code == 2);
  CHECK(run_cli("verify").exit_code == 2);
  CHECK(run_cli("verify --enumerate 9").exit_code == 2);
}
