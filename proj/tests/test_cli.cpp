#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kdim/cli.hpp"
#include "kdim/families.hpp"
#include "kdim/graph_io.hpp"

using namespace kdim;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("solve emits a json certificate") {
  const auto r = run({"solve", "--graph", "petersen", "--k", "1", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["dim"] == 3);
  CHECK(j["verified"] == true);
  CHECK(j["set"].size() == 3);
  CHECK_FALSE(j.contains("elapsed_ms"));
  CHECK(nlohmann::json::parse(run({"solve", "--graph", "petersen", "--timing"}).out).contains("elapsed_ms"));
}

TEST_CASE("solve from a file matches solve from a family spec") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto edges = dir / "kdim_cli_c13.txt";
  const auto g6 = dir / "kdim_cli_c13.g6";
  write_graph(cycle(13), edges, GraphFormat::EdgeList);
  write_graph(cycle(13), g6, GraphFormat::Graph6);
  const auto a = run({"solve", "--graph", "cycle:n=13", "--k", "2"});
  const auto b = run({"solve", "--file", edges.string(), "--k", "2"});
  const auto c = run({"solve", "--file", g6.string(), "--k", "2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(nlohmann::json::parse(a.out)["dim"] == 4);
  std::filesystem::remove(edges);
  std::filesystem::remove(g6);
}

TEST_CASE("solve variants") {
  auto r = run({"solve", "--graph", "path:n=9", "--classical", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("dim_7 = 1", 0) == 0);

  r = run({"solve", "--graph", "g6:C~", "--k", "1"});
  CHECK(nlohmann::json::parse(r.out)["dim"] == 3);

  r = run({"solve", "--graph", "ternary:beta=2", "--k", "2"});
  CHECK(r.code == 2);
  r = run({"solve", "--graph", "ternary:beta=2", "--k", "2", "--allow-disconnected"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["dim"] == 2);

  r = run({"solve", "--graph", "cycle:n=16", "--k", "1", "--budget", "1"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["method"] == "greedy-upper");
}

TEST_CASE("formula") {
  auto r = run({"formula", "--family", "cycle", "--n", "10", "--k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");
  CHECK(run({"formula", "--family", "multipartite", "--parts", "1-2-2"}).out == "2\n");
  CHECK(run({"formula", "--family", "petersen"}).out == "3\n");
  CHECK(run({"formula", "--family", "wheel_deletion", "--k", "2", "--x", "1"}).out == "6\n");
  r = run({"formula", "--family", "path", "--n", "13", "--k", "2", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == 4);
  CHECK(j["family"] == "path");
  CHECK(run({"formula", "--family", "grid", "--n", "3"}).code == 2);
  CHECK(run({"formula", "--family", "cycle", "--n", "2"}).code == 2);
  CHECK(run({"formula", "--family", "multipartite", "--parts", "2-x"}).code == 2);
}

TEST_CASE("generate") {
  auto r = run({"generate", "--family", "cycle:n=5", "--format", "graph6"});
  CHECK(r.code == 0);
  CHECK(parse_graph6(r.out) == cycle(5));

  r = run({"generate", "--family", "edge_gap", "-p", "a=2", "-p", "delete=1"});
  std::istringstream in(r.out);
  CHECK(parse_edge_list(in) == build_family("edge_gap:a=2,delete=1"));

  const auto file = std::filesystem::temp_directory_path() / "kdim_cli_gen.txt";
  CHECK(run({"generate", "--family", "petersen", "--out", file.string()}).code == 0);
  CHECK(read_graph(file, GraphFormat::EdgeList) == petersen());
  std::filesystem::remove(file);

  CHECK(run({"generate", "--family", "nosuch"}).code == 2);
  CHECK(run({"generate", "--family", "cycle", "-p", "n"}).code == 2);
}

TEST_CASE("verify and sweep") {
  auto r = run({"verify", "--suite", "gap-lemmas", "--n-max", "12", "--k-max", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 failed") != std::string::npos);

  r = run({"verify", "--suite", "bounds", "--count", "10", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);
  const auto again = run({"verify", "--suite", "bounds", "--count", "10", "--format", "csv", "--jobs", "3"});
  CHECK(again.out == r.out);

  r = run({"verify", "--suite", "characterization", "--n-max", "5", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["summary"]["failed"] == 0);

  CHECK(run({"verify", "--suite", "nosuch"}).code == 2);
  CHECK(run({"verify", "--suite", "bounds", "--k-min", "3", "--k-max", "2"}).code == 2);
}

TEST_CASE("sweep runs every suite") {
  const auto r = run({"sweep", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["suites"].size() == 6);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  r = run({"enumerate", "--n", "5", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["count"] == 21);
  CHECK(run({"enumerate", "--n", "9"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"solve", "--k", "1"}).code == 2);
  CHECK(run({"solve", "--graph", "petersen", "--file", "x", "--k", "1"}).code == 2);
  CHECK(run({"solve", "--file", "/nonexistent/graph.txt"}).code == 2);
  CHECK(run({"solve", "--graph", "petersen", "--k", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("job count default comes from the environment") {
  ::setenv("KDIM_JOBS", "3", 1);
  CHECK(cli::default_jobs() == 3);
  ::setenv("KDIM_JOBS", "zero", 1);
  CHECK(cli::default_jobs() == 1);
  ::unsetenv("KDIM_JOBS");
  CHECK(cli::default_jobs() == 1);
}
