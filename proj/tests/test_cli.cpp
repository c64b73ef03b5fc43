#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#ifndef ORCHARD_CLI_PATH
#error "ORCHARD_CLI_PATH must point at the built binary"
#endif

namespace {

using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

CliResult run_cli(const std::string& args, const std::string& stdin_data = "") {
  static int serial = 0;
  const std::string tag = "cli_tmp_" + std::to_string(serial++);
  const std::string in = tag + ".in", out = tag + ".out", err = tag + ".err";
  {
    std::ofstream f(in, std::ios::binary);
    f << stdin_data;
  }
  const std::string cmd = std::string(ORCHARD_CLI_PATH) + " " + args + " < " + in +
                          " > " + out + " 2> " + err;
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  std::remove(in.c_str());
  std::remove(out.c_str());
  std::remove(err.c_str());
  return r;
}

void require_integral_json(const json& j) {
  if (j.is_number_float()) FAIL("float found in JSON output: " + j.dump());
  if (j.is_object() || j.is_array()) {
    for (const auto& item : j) require_integral_json(item);
  }
}

}  // namespace

TEST_CASE("formula prints single values and tables", "[cli]") {
  const auto single = run_cli("formula --n 3");
  CHECK(single.exit_code == 0);
  CHECK(single.out == "ocn_knn(3) = 12\n");

  const auto table = run_cli("formula --max-n 4 --json");
  REQUIRE(table.exit_code == 0);
  const auto j = json::parse(table.out);
  REQUIRE(j["values"].size() == 4);
  CHECK(j["values"][2]["value"] == 12);
  CHECK(j["values"][3]["value"] == 64);
  require_integral_json(j);

  CHECK(run_cli("formula").exit_code == 1);
  CHECK(run_cli("formula --n 2 --max-n 3").exit_code == 1);
  CHECK(run_cli("formula --n 0").exit_code == 1);
}

TEST_CASE("verify reproduces the closed form", "[cli]") {
  const auto r = run_cli("verify --max-n 5 --json");
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["all_match"] == true);
  REQUIRE(j["results"].size() == 5);
  CHECK(j["results"][4]["n"] == 5);
  CHECK(j["results"][4]["value"] == 200);
  CHECK(j["results"][4]["identities_passed"] == true);
  require_integral_json(j);

  CHECK(run_cli("verify --max-n 0").exit_code == 1);
  CHECK(run_cli("verify").exit_code == 1);
}

TEST_CASE("gen and eval form a pipeline", "[cli]") {
  const auto gen = run_cli("gen --kind convex --n 3");
  REQUIRE(gen.exit_code == 0);
  const auto doc = json::parse(gen.out);
  CHECK(doc["points"].size() == 6);
  CHECK(doc["edges"] == "complete_bipartite");

  const auto eval = run_cli("eval --json", gen.out);
  REQUIRE(eval.exit_code == 0);
  const auto j = json::parse(eval.out);
  CHECK(j["crossing_number"] == 12);
  CHECK(j["by_quadruples"] == 12);
  CHECK(j["agree"] == true);

  const auto text = run_cli("eval", gen.out);
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("crossing_number: 12") != std::string::npos);
}

TEST_CASE("gen honors seeds reproducibly", "[cli]") {
  const auto a = run_cli("gen --kind random --n 3 --seed 5");
  const auto b = run_cli("gen --kind random --n 3 --seed 5");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto c = run_cli("gen --kind random --black 2 --white 4 --seed 5 --range 9");
  REQUIRE(c.exit_code == 0);
  const auto doc = json::parse(c.out);
  REQUIRE(doc["points"].size() == 6);
  int blacks = 0;
  for (const auto& p : doc["points"]) {
    CHECK(p["x"].get<std::int64_t>() <= 9);
    CHECK(p["y"].get<std::int64_t>() >= 0);
    blacks += p["color"] == "black";
  }
  CHECK(blacks == 2);
  CHECK(run_cli("gen --kind random").exit_code == 1);
  CHECK(run_cli("gen --kind marble --n 2").exit_code == 1);
}

TEST_CASE("eval rejects malformed and degenerate input", "[cli]") {
  CHECK(run_cli("eval", "this is not json").exit_code == 1);
  CHECK(run_cli("eval", "{\"points\": [], \"edges\": []}").exit_code == 0);
  const auto collinear = run_cli(
      "eval",
      R"({"points": [{"x":0,"y":0,"color":"black"},{"x":1,"y":1,"color":"white"},
          {"x":2,"y":2,"color":"black"}], "edges": "complete_bipartite"})");
  CHECK(collinear.exit_code == 1);
  CHECK(run_cli("eval --input missing_file.json").exit_code == 1);
}

TEST_CASE("decompose reports the split and the checks", "[cli]") {
  const auto gen = run_cli("gen --kind convex --n 3");
  const auto r = run_cli("decompose --json --lines --tables", gen.out);
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["n"] == 3);
  CHECK(j["a"] == 6);
  CHECK(j["b"] == 3);
  CHECK(j["c"] == 3);
  CHECK(j["total"] == 12);
  CHECK(j["identities_passed"] == true);
  CHECK(j["bounds_satisfied"] == true);
  CHECK(j["checks"].size() == 23);
  CHECK(j["checks"][0]["kind"] == "identity");
  CHECK(j["lines"].size() == 15);
  CHECK(j["type_tables"].size() == 3);
  CHECK(j["profiles"].size() == 3);
  require_integral_json(j);

  const auto unbalanced = run_cli("decompose", run_cli("gen --kind random --black 2 --white 3 --seed 1").out);
  CHECK(unbalanced.exit_code == 1);
}

// A drawing that dips below a same-color floor is valid input: the report
// flags the bound and the command still succeeds, because the floor is a
// statement about convex optima rather than about every drawing.
TEST_CASE("decompose reports floor violations without failing", "[cli]") {
  const auto gen = run_cli("gen --kind random --n 5 --range 60 --seed 204");
  REQUIRE(gen.exit_code == 0);
  const auto r = run_cli("decompose --json", gen.out);
  REQUIRE(r.exit_code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["b"] == 46);
  CHECK(j["identities_passed"] == true);
  CHECK(j["bounds_satisfied"] == false);
  bool saw_floor = false;
  for (const auto& c : j["checks"]) {
    if (c["name"] != "floor_white_white") continue;
    saw_floor = true;
    CHECK(c["kind"] == "bound");
    CHECK(c["status"] == "fail");
    REQUIRE(c["witnesses"].size() == 1);
    CHECK(c["witnesses"][0] == "b = 46 below 50");
  }
  CHECK(saw_floor);
}

TEST_CASE("search certifies K_{2,2} and anneals deterministically", "[cli]") {
  const auto grid = run_cli("search --family knn --n 2 --strategy exhaustive --grid 4x4 --json");
  REQUIRE(grid.exit_code == 0);
  const auto j = json::parse(grid.out);
  CHECK(j["best_value"] == 0);
  CHECK(j["certificate"] == "exhaustive-proof");
  CHECK(j["grid"]["width"] == 4);
  CHECK(j["best"]["points"].size() == 4);
  require_integral_json(j);

  const std::string anneal_args = "search --n 2 --seed 3 --budget 2000 --json";
  const auto a = run_cli(anneal_args);
  const auto b = run_cli(anneal_args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto ja = json::parse(a.out);
  CHECK(ja["certificate"] == "heuristic-best");
  CHECK(ja["evaluations"] == 2000);
  require_integral_json(ja);

  CHECK(run_cli("search --n 2 --strategy exhaustive").exit_code == 1);
  CHECK(run_cli("search --n 2 --strategy exhaustive --grid 4y4").exit_code == 1);
  CHECK(run_cli("search --n 0").exit_code == 1);
  CHECK(run_cli("search --n 2 --family circulant").exit_code == 1);
}

TEST_CASE("output files and help behave", "[cli]") {
  const std::string path = "cli_out_test.json";
  const auto r = run_cli("formula --n 4 --json --output " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  const auto written = json::parse(slurp(path));
  CHECK(written["values"][0]["value"] == 64);
  std::remove(path.c_str());

  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("eval --frob", "{}").exit_code == 1);
}
