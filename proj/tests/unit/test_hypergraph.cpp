#include <doctest.h>

#include <algorithm>
#include <string>

#include "fixtures.hpp"
#include "generators.hpp"
#include "hyperpath/errors.hpp"
#include "hyperpath/hypergraph.hpp"

using namespace hyperpath;
using namespace hyperpath::testing;

namespace {

std::string error_of(auto&& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

VertexMask mask(std::size_t n, std::initializer_list<VertexId> on) {
  VertexMask m(n, false);
  for (VertexId v : on) m[v] = true;
  return m;
}

}  // namespace

TEST_CASE("F1 builds with consistent indexes") {
  const Hypergraph g = f1().graph;
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_arcs() == 4);
  CHECK_NOTHROW(g.validate());
  // 4 vertices + (2 + 2 + 3 + 3) head/tail slots.
  CHECK(g.total_size() == 14);

  const VertexId omega = *g.find("omega"), a = *g.find("A"), s = *g.find("S");
  CHECK(std::vector<ArcIndex>(g.arcs_with_tail(omega).begin(), g.arcs_with_tail(omega).end()) ==
        std::vector<ArcIndex>{1, 2});
  CHECK(std::vector<ArcIndex>(g.arcs_with_tail(a).begin(), g.arcs_with_tail(a).end()) ==
        std::vector<ArcIndex>{3, 4});
  CHECK(g.tail_multiplicities(a)[1] == 2);
  CHECK(std::vector<ArcIndex>(g.arcs_with_head(s).begin(), g.arcs_with_head(s).end()) ==
        std::vector<ArcIndex>{3, 4});
  REQUIRE(g.distinct_tails(4).size() == 1);
  CHECK(g.distinct_tails(4)[0] == Tail{a, 2});
  CHECK(g.arc(4).tails == std::vector<VertexId>{a, a});
}

TEST_CASE("trivial hypergraph") {
  const Hypergraph g = Hypergraph::build(1, {});
  CHECK(g.num_vertices() == 1);
  CHECK(g.num_arcs() == 0);
  CHECK(g.name(0) == "v0");
  CHECK_NOTHROW(g.validate());
}

TEST_CASE("build rejects malformed arcs, naming them") {
  CHECK(error_of([] { Hypergraph::build(2, {{1, {{0, 1}}, -1}}); }).find("negative length") !=
        std::string::npos);
  CHECK(error_of([] { Hypergraph::build(2, {{1, {{0, 1}}, 1}, {1, {{0, 0}}, 1}}); })
            .find("arc 2") != std::string::npos);
  CHECK(error_of([] { Hypergraph::build(2, {{1, {{5, 1}}, 1}}); }) != "");
  CHECK(error_of([] { Hypergraph::build(2, {{1, {}, 1}}); }) != "");
  CHECK(error_of([] { Hypergraph::build(2, {{1, {{0, 1}}, std::nan("")}}); }) != "");
  CHECK(error_of([] { Hypergraph::build(2, {{1, {{0, 1}}, kInfinity}}); }) != "");
  CHECK(error_of([] { Hypergraph::build({"x", "x"}, {}); }).find("x") != std::string::npos);
}

TEST_CASE("self-loops and cycles are legal") {
  CHECK_NOTHROW(Hypergraph::build(2, {{0, {{0, 1}}, 0}, {1, {{0, 1}, {1, 2}}, 0}}));
}

TEST_CASE("restriction of F1") {
  const Hypergraph g = f1().graph;
  SUBCASE("to everything is the identity") {
    const Restriction r = restrict_to(g, VertexMask(4, true));
    CHECK(r.graph == g);
    CHECK(r.vertex_to_new == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(r.arc_to_old == std::vector<ArcIndex>{0, 1, 2, 3, 4});
  }
  SUBCASE("to omega, A, S keeps e1 and e4") {
    const Restriction r = restrict_to(g, mask(4, {0, 1, 3}));
    CHECK(r.graph.num_vertices() == 3);
    CHECK(r.arc_to_old == std::vector<ArcIndex>{0, 1, 4});
    CHECK(r.arc_to_new == std::vector<ArcIndex>{0, 1, 0, 0, 2});
    CHECK(r.vertex_to_new[2] == kNoVertex);
    CHECK(r.graph.name(2) == "S");
    CHECK(r.graph.arc(2).tails == std::vector<VertexId>{1, 1});
  }
  SUBCASE("to nothing is empty") {
    const Restriction r = restrict_to(g, VertexMask(4, false));
    CHECK(r.graph.num_vertices() == 0);
    CHECK(r.graph.num_arcs() == 0);
  }
}

TEST_CASE("restriction keeps exactly the arcs inside the subset") {
  Rng rng(3);
  for (int round = 0; round < 300; ++round) {
    const Instance inst = random_instance(rng);
    const Hypergraph& g = inst.graph;
    VertexMask keep(g.num_vertices());
    for (std::size_t v = 0; v < keep.size(); ++v) keep[v] = std::bernoulli_distribution(0.6)(rng);

    const Restriction r = restrict_to(g, keep);
    CHECK_NOTHROW(r.graph.validate());
    std::vector<ArcIndex> expected{0};
    for (ArcIndex i = 1; i <= g.num_arcs(); ++i) {
      const auto& a = g.arc(i);
      if (keep[a.head] && std::all_of(a.tails.begin(), a.tails.end(), [&](VertexId t) { return keep[t]; })) {
        expected.push_back(i);
      }
    }
    CHECK(r.arc_to_old == expected);
    for (ArcIndex j = 1; j <= r.graph.num_arcs(); ++j) {
      const auto& old = g.arc(r.arc_to_old[j]);
      const auto& now = r.graph.arc(j);
      CHECK(r.graph.name(now.head) == g.name(old.head));
      CHECK(now.length == old.length);
    }

    // Idempotent.
    const Restriction again = restrict_to(r.graph, VertexMask(r.graph.num_vertices(), true));
    CHECK(again.graph == r.graph);

    // compose() agrees with restricting in one step.
    VertexMask inner(r.graph.num_vertices());
    for (std::size_t v = 0; v < inner.size(); ++v) inner[v] = std::bernoulli_distribution(0.7)(rng);
    const Restriction second = restrict_to(r.graph, inner);
    const Restriction both = compose(r, second);
    VertexMask direct(g.num_vertices(), false);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      direct[v] = keep[v] && inner[r.vertex_to_new[v]];
    }
    const Restriction one_step = restrict_to(g, direct);
    CHECK(both.graph == one_step.graph);
    CHECK(both.arc_to_old == one_step.arc_to_old);
    CHECK(both.vertex_to_new == one_step.vertex_to_new);
  }
}

TEST_CASE("query validation") {
  const Hypergraph g = f1().graph;
  CHECK_NOTHROW(Query{{{0, 0}}, 3}.validate(g));
  CHECK_THROWS_AS(Query({{}, 3}).validate(g), ValidationError);
  CHECK_THROWS_AS(Query({{{0, 0}, {0, 1}}, 3}).validate(g), ValidationError);
  CHECK_THROWS_AS(Query({{{0, -1}}, 3}).validate(g), ValidationError);
  CHECK_THROWS_AS(Query({{{0, 0}}, 9}).validate(g), ValidationError);
}

TEST_CASE("map_query drops lost sources and reports a lost target") {
  const Hypergraph g = f1().graph;
  const Restriction r = restrict_to(g, mask(4, {0, 1, 3}));
  const auto q = r.map_query({{{0, 0}, {2, 1}}, 3});
  REQUIRE(q);
  CHECK(q->sources == std::vector<Source>{{0, 0}});
  CHECK(q->target == 2);
  CHECK_FALSE(r.map_query({{{0, 0}}, 2}));
}
