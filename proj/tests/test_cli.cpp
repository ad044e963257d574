#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr interleaved
};

std::string cli_path() {
#ifdef BICIRC_CLI_PATH
  return BICIRC_CLI_PATH;
#else
  const char* p = std::getenv("BICIRC_CLI_PATH");
  REQUIRE(p != nullptr);
  return p;
#endif
}

RunResult run_cli(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("graph subcommand") {
  RunResult r = run_cli("graph 2C3 --show");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "vertices 3"));
  CHECK(contains(r.output, "link 0 1"));

  RunResult props = run_cli("graph C3o --props");
  CHECK(props.exit_code == 0);
  CHECK(contains(props.output, "min_degree 4"));
  CHECK(contains(props.output, "2-connected true"));

  RunResult canon1 = run_cli("graph 2C3 --canonical");
  RunResult canon2 = run_cli("graph T_2_2_2 --canonical");
  CHECK(canon1.exit_code == 0);
  CHECK(canon1.output == canon2.output);

  RunResult bad = run_cli("graph Q9");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.output, "unknown named graph"));
}

TEST_CASE("matroid subcommand") {
  RunResult rank = run_cli("matroid from-graph 2C3 --rank");
  CHECK(rank.exit_code == 0);
  CHECK(rank.output == "3\n");

  RunResult corank = run_cli("matroid from-graph 7K2 --dual --rank");
  CHECK(corank.exit_code == 0);
  CHECK(corank.output == "5\n");

  RunResult bases = run_cli("matroid from-graph K4 --bases");
  CHECK(bases.exit_code == 0);
  int count = 0;
  for (size_t pos = 0; (pos = bases.output.find("basis", pos)) != std::string::npos; ++pos)
    ++count;
  CHECK(count == 15);

  RunResult circ = run_cli("matroid from-graph 7K2 --circuits");
  CHECK(circ.exit_code == 0);
  count = 0;
  for (size_t pos = 0; (pos = circ.output.find("circuit", pos)) != std::string::npos; ++pos)
    ++count;
  CHECK(count == 35);  // every 3 of the 7 parallel edges

  RunResult nofile = run_cli("matroid from-file /no/such/file.mtd");
  CHECK(nofile.exit_code == 2);
}

TEST_CASE("reps subcommand") {
  RunResult r = run_cli("reps U4,6");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "2 representations"));
  RunResult w = run_cli("reps W3");
  CHECK(w.exit_code == 0);
  CHECK(contains(w.output, "1 representation\n"));
}

TEST_CASE("decompose subcommand") {
  RunResult r = run_cli("decompose 2C4");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "5 nodes"));
  CHECK(contains(r.output, "cycle"));
  CHECK(contains(r.output, "multilink"));

  RunResult dot = run_cli("decompose 2C4 --dot");
  CHECK(dot.exit_code == 0);
  CHECK(contains(dot.output, "graph"));

  // loops are stripped with a warning, so C3o decomposes as C3
  RunResult loops = run_cli("decompose C3o");
  CHECK(loops.exit_code == 0);
  CHECK(contains(loops.output, "warning: loops stripped"));
  CHECK(contains(loops.output, "1 node\n"));

  RunResult sep = run_cli("decompose T_2_1_0");
  CHECK(sep.exit_code == 2);
}

TEST_CASE("bgr files round trip through the cli") {
  std::string path = "cli_roundtrip_tmp.bgr";
  {
    std::ofstream f(path);
    f << "vertices 3\nlink 0 1\nlink 0 1\nlink 1 2\nlink 1 2\nlink 2 0\nlink 2 0\n";
  }
  RunResult r = run_cli("matroid from-graph " + path + " --rank");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "3\n");
  std::remove(path.c_str());
}

TEST_CASE("verify subcommand") {
  RunResult r = run_cli("verify --suite check_free_swirls --report cli_report_tmp.json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"check_id\": \"check_free_swirls\""));
  CHECK(contains(r.output, "\"status\": \"pass\""));
  std::ifstream f("cli_report_tmp.json");
  REQUIRE(f.good());
  std::string file_json((std::istreambuf_iterator<char>(f)),
                        std::istreambuf_iterator<char>());
  CHECK(file_json == r.output);
  std::remove("cli_report_tmp.json");
}
