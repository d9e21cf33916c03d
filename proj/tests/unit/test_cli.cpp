#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"

using namespace hyperpath::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "hyperpath");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = hyperpath::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in, "missing " << path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string golden(const std::string& name) { return slurp(golden_path(name)); }

struct TempDir {
  fs::path path = fs::temp_directory_path() / ("hyperpath-cli-" + std::to_string(::getpid()));
  TempDir() { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("validate") {
  const auto r = run({"validate", golden_path("f1.hg")});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(r.err.empty());
}

TEST_CASE("reading from standard input") {
  const auto r = run({"inside", "-"}, kF1);
  CHECK(r.code == 0);
  CHECK(r.out == golden("f1.inside.txt"));
}

TEST_CASE("golden outputs for F1") {
  const std::string f1 = golden_path("f1.hg");
  CHECK(run({"inside", f1}).out == golden("f1.inside.txt"));
  CHECK(run({"outside", f1}).out == golden("f1.outside.txt"));
  CHECK(run({"best-tree", f1}).out == golden("f1.best-tree.txt"));
  CHECK(run({"reach-from", f1}).out == "omega\nA\nB\nS\n");
  CHECK(run({"best-tree", "--vertex", "A", f1}).out == "(1 omega)\n1\n");

  const auto pruned = run({"prune", "--beam", "1", f1});
  CHECK(pruned.code == 0);
  CHECK(pruned.out == golden("f1.prune-1.hg"));
  CHECK(pruned.err == golden("f1.prune-1.report.txt"));
}

TEST_CASE("prune --report json") {
  const auto r = run({"prune", "--beam", "1.0", "--report", "json", golden_path("f1.hg")});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.err);
  CHECK(doc["best"] == 3.5);
  REQUIRE(doc["arcs"].size() == 4);
  CHECK(doc["arcs"][3]["index"] == 4);
  CHECK(doc["arcs"][3]["gamma"] == 5.0);
  CHECK(doc["arcs"][3]["keep"] == false);
  CHECK(doc["arcs"][3]["tails"] == nlohmann::json::array({"A", "A"}));
  CHECK(doc["vertices"][0]["name"] == "omega");
  CHECK(doc["vertices"][0]["outside"] == 3.5);
  CHECK(r.err == golden("f1.prune-1.report.json"));
}

TEST_CASE("prune with an infinite beam equals reduce") {
  TempDir tmp;
  const std::string input = golden_path("f1-extra.hg");
  REQUIRE(run({"reduce", "-o", tmp / "reduced.hg", input}).code == 0);
  const auto r = run({"prune", "--beam", "inf", "--report-file", tmp / "report.txt", input});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out == slurp(tmp / "reduced.hg"));
  CHECK_FALSE(slurp(tmp / "report.txt").empty());
}

TEST_CASE("reduce lists the surviving vertices") {
  const auto r = run({"reduce", golden_path("f1-extra.hg")});
  CHECK(r.code == 0);
  CHECK(r.out == "omega\nA\nB\nS\n");
  // Without the forward pass first, reach-to also marks the unreachable Q.
  CHECK(run({"reach-to", golden_path("f1-extra.hg")}).out == "omega\nA\nB\nS\nQ\n");
}

TEST_CASE("unreachable target exits 2") {
  const std::string path = golden_path("empty-target.hg");
  for (const char* cmd : {"inside", "outside", "reduce"}) {
    const auto r = run({cmd, path});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("target unreachable") != std::string::npos);
  }
  CHECK(run({"prune", "--beam", "1", path}).code == 2);
  CHECK(run({"best-tree", path}).code == 2);
}

TEST_CASE("usage and parse errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"prune", golden_path("f1.hg")}).code == 1);
  CHECK(run({"prune", "--beam", "-1", golden_path("f1.hg")}).code == 1);
  CHECK(run({"prune", "--beam", "wide", golden_path("f1.hg")}).code == 1);
  CHECK(run({"inside", "/nonexistent/file.hg"}).code == 1);

  const auto r = run({"inside", "-"}, "vertex a\narc a <- b @ -2\n");
  CHECK(r.code == 1);
  CHECK(r.err.find("<stdin>:2:") != std::string::npos);

  const auto g = run({"from-grammar", "-"}, "1: S -> a\nS -> b\n");
  CHECK(g.code == 1);
  CHECK(g.err.find(":2:") != std::string::npos);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("prune-grammar") != std::string::npos);
}

TEST_CASE("from-grammar writes the hypergraph and the map") {
  TempDir tmp;
  const auto r = run({"from-grammar", "-o", tmp / "g.hg", golden_path("f1.grammar")});
  REQUIRE(r.code == 0);
  CHECK(slurp(tmp / "g.hg") == golden("f1.grammar.hg"));
  CHECK(slurp(tmp / "g.hg.map") == golden("f1.grammar.map"));

  const auto to_stdout = run({"from-grammar", golden_path("f1.grammar")});
  CHECK(to_stdout.out == golden("f1.grammar.hg"));
}

TEST_CASE("prune-grammar") {
  const auto r = run({"prune-grammar", "--beam", "1", golden_path("f1.grammar")});
  REQUIRE(r.code == 0);
  CHECK(r.out == golden("f1.prune-grammar-1.txt"));

  const auto empty = run({"prune-grammar", "--beam", "1", "-"}, "1: S -> f(S)\n");
  CHECK(empty.code == 2);
}
