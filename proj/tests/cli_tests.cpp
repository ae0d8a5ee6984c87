#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(GRUNDY_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  r.status = pclose(pipe);
  return r;
}

std::vector<json> parse_records(const std::string& out) {
  std::vector<json> recs;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] == '{') recs.push_back(json::parse(line));
  return recs;
}

}  // namespace

TEST_CASE("invariant subcommand") {
  RunResult r = run_cli("invariant path:5 --variant=total");
  CHECK(r.status == 0);
  auto recs = parse_records(r.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["value"] == 4);
  CHECK(recs[0]["variant"] == "total");
  CHECK(recs[0]["input"]["spec"] == "path:5");

  CHECK(parse_records(run_cli("invariant complete:3 --variant=z").out)[0]["value"] == 1);
  CHECK(parse_records(run_cli("invariant g6:A_ --variant=total").out)[0]["value"] == 2);
  CHECK(parse_records(run_cli("invariant t8 --variant=total").out)[0]["value"] == 6);

  RunResult w = run_cli("invariant path:4 --witness");
  auto witness = parse_records(w.out)[0]["witness"];
  CHECK(witness.size() == 4);
}

TEST_CASE("invariant errors surface with nonzero exit") {
  RunResult bad = run_cli("invariant nonsense:3");
  CHECK(bad.status != 0);
  CHECK(bad.out.find("graph spec grammar") != std::string::npos);

  RunResult capped = run_cli("invariant path:40");
  CHECK(capped.status != 0);
  CHECK(capped.out.find("exact search refused") != std::string::npos);

  RunResult raised = run_cli("invariant path:40 --cap=64");
  CHECK(raised.status == 0);
}

TEST_CASE("GRUNDY_CAP environment variable raises the default cap") {
  std::string cmd = "GRUNDY_CAP=64 " + std::string(GRUNDY_CLI_PATH) +
                    " invariant path:40 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  int status = pclose(pipe);
  CHECK(status == 0);
  CHECK(parse_records(out)[0]["value"] == 40);
}

TEST_CASE("product subcommand") {
  RunResult r = run_cli("product direct path:4 path:6 --solve --predict");
  CHECK(r.status == 0);
  auto rec = parse_records(r.out)[0];
  CHECK(rec["solve"]["value"] == 24);
  CHECK(rec["predict"]["exact"] == 24);
  CHECK(rec["status"] == "tight");

  auto cart = parse_records(
      run_cli("product cartesian path:4 path:4 --solve").out)[0];
  CHECK(cart["solve"]["value"] == 12);

  auto strong = parse_records(
      run_cli("product strong path:3 path:4 --solve --predict --witness").out)[0];
  CHECK(strong["predict"]["lower"] == 8);
  CHECK(strong["predict"]["upper"] == 9);
  int solved = strong["solve"]["value"];
  CHECK(solved >= 8);
  CHECK(solved <= 9);
  CHECK(strong["witness"]["length"] >= 8);

  // cap refusal is a recorded status, not a crash
  auto big = parse_records(run_cli("product cartesian path:7 path:7 --solve").out)[0];
  CHECK(big["solve"].contains("skipped"));
}

TEST_CASE("sweep-conjecture subcommand") {
  RunResult r = run_cli("sweep-conjecture --enumerate=3");
  CHECK(r.status == 0);
  auto recs = parse_records(r.out);
  REQUIRE(!recs.empty());
  json summary = recs.back();
  CHECK(summary["cmd"] == "sweep-summary");
  CHECK(summary["pairs"] == 6);  // K_1, K_2, P_3: 6 unordered pairs
  CHECK(summary["violations"] == 0);

  // identical invocations produce byte-identical records
  RunResult again = run_cli("sweep-conjecture --enumerate=3");
  CHECK(again.out == r.out);

  RunResult jobs = run_cli("sweep-conjecture --enumerate=3 --jobs=4");
  CHECK(jobs.out == r.out);
}

TEST_CASE("sweep-conjecture with an empty input file") {
  std::string path = "empty_sweep_input.g6";
  std::ofstream(path).close();
  RunResult r = run_cli("sweep-conjecture --file=" + path);
  CHECK(r.status == 0);
  json summary = parse_records(r.out).back();
  CHECK(summary["pairs"] == 0);
  std::remove(path.c_str());
}

TEST_CASE("tables subcommand") {
  // the direct path-path table is fully tight across 2..5
  RunResult r = run_cli("tables direct --gfam=path --hfam=path --k=2:5 --l=2:5");
  CHECK(r.status == 0);
  auto recs = parse_records(r.out);
  CHECK(recs.size() == 16);
  for (const json& rec : recs) {
    REQUIRE(rec.contains("status"));
    CHECK(rec["status"] == "tight");
  }

  // the strong table brackets: solve sits inside [lower, upper]
  for (const json& rec :
       parse_records(run_cli("tables strong --gfam=path --hfam=cycle --k=3:4 --l=3:4").out)) {
    REQUIRE(rec.contains("solve"));
    int solved = rec["solve"]["value"];
    CHECK(rec["predict"]["lower"] <= solved);
    CHECK(solved <= rec["predict"]["upper"]);
  }

  RunResult table = run_cli("tables cartesian --k=3:4 --l=3:4 --format=table");
  CHECK(table.status == 0);
  CHECK(table.out.find("k\\l") != std::string::npos);
}

TEST_CASE("hypergraph subcommands") {
  std::string path = "cli_test_hypergraph.txt";
  {
    std::ofstream f(path);
    f << "4 4\n1\n0 2\n1 3\n2\n";  // open neighborhoods of P_4
  }
  auto rec = parse_records(run_cli("hypergraph rho --file=" + path).out)[0];
  CHECK(rec["value"] == 4);

  RunResult inc = run_cli("hypergraph incidence --file=" + path);
  CHECK(inc.status == 0);
  CHECK(!inc.out.empty());

  RunResult prod =
      run_cli("hypergraph product --file-a=" + path + " --file-b=" + path);
  CHECK(prod.status == 0);
  CHECK(prod.out.rfind("16 16", 0) == 0);
  std::remove(path.c_str());
}
