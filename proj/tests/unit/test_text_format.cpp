#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "generators.hpp"
#include "hyperpath/errors.hpp"
#include "hyperpath/text_format.hpp"

using namespace hyperpath;
using namespace hyperpath::testing;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_document_string(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("F1 parses") {
  const Document d = f1();
  CHECK(d.graph.names().size() == 4);
  CHECK(d.graph.name(0) == "omega");
  CHECK(d.graph.name(3) == "S");
  CHECK(d.graph.arc(3).length == 0.5);
  CHECK(d.sources == std::vector<Source>{{0, 0}});
  CHECK(d.target == 3u);
}

TEST_CASE("vertices are declared by first use") {
  const Document d = parse_document_string("arc b <- a c*3 @ 1e-3\nsource a 0.25\n");
  CHECK(d.graph.name(0) == "b");
  CHECK(d.graph.name(1) == "a");
  CHECK(d.graph.name(2) == "c");
  CHECK(d.graph.arc(1).tails == std::vector<VertexId>{1, 2, 2, 2});
  CHECK(d.sources[0].initial_cost == 0.25);
  CHECK_FALSE(d.target);
  CHECK_THROWS_AS(d.query(), ValidationError);
}

TEST_CASE("parse errors carry the line number") {
  CHECK(error_line("vertex a\n\narc a <- b @ -1\n") == 3);
  CHECK(error_line("# c\narc a <- b @ x\n") == 2);
  CHECK(error_line("arc a <- b\n") == 1);
  CHECK(error_line("arc a b @ 1\n") == 1);
  CHECK(error_line("vertex a\nvertex a\n") == 2);
  CHECK(error_line("arc a <- b*0 @ 1\n") == 1);
  CHECK(error_line("arc a <- b @ nan\n") == 1);
  CHECK(error_line("arc a <- b @ inf\n") == 1);
  CHECK(error_line("frobnicate a\n") == 1);
  CHECK(error_line("source a\nsource a\n") == 2);
  CHECK(error_line("source a -1\n") == 1);
  CHECK(error_line("target a\ntarget b\n") == 2);
  CHECK(error_line("arc a <- b @ 1\nvertex a\n") == 2);
}

TEST_CASE("costs print with 17 significant digits") {
  CHECK(format_cost(0.1) == "0.10000000000000001");
  CHECK(format_cost(3.5) == "3.5");
  CHECK(format_cost(kInfinity) == "inf");
  CHECK(parse_cost("inf") == kInfinity);
  CHECK(parse_cost("Infinity") == kInfinity);
  CHECK_FALSE(parse_cost("nan"));
  CHECK_FALSE(parse_cost("1.5x"));
  CHECK_FALSE(parse_cost(""));
}

TEST_CASE("F1 writes back to the golden file") {
  const Document d = f1();
  std::ifstream in(golden_path("f1.canonical.hg"));
  REQUIRE(in);
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(to_text(d.graph, d.sources, d.target) == golden.str());
}

TEST_CASE("write -> parse -> write is byte-identical") {
  Rng rng(5);
  RandomGraphParams p;
  p.min_length = 0;
  p.max_length = 1e6;
  for (int round = 0; round < 300; ++round) {
    const Instance inst = random_instance(rng, p);
    const std::string once = to_text(inst.graph, inst.sources, inst.target);
    const Document d = parse_document_string(once);
    CHECK(d.graph == inst.graph);
    CHECK(d.sources == inst.sources);
    CHECK(d.target == inst.target);
    CHECK(to_text(d.graph, d.sources, d.target) == once);
  }
}

TEST_CASE("repeated tails collapse only when adjacent") {
  const Document d = parse_document_string("arc s <- a b a a @ 2\n");
  CHECK(to_text(d.graph) == "vertex s\nvertex a\nvertex b\narc s <- a b a*2 @ 2\n");
}
