#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace hyperpath;
using namespace hyperpath::testing;

namespace {

std::vector<VertexId> ids(std::initializer_list<VertexId> xs) { return xs; }

}  // namespace

TEST_CASE("fixpoint reach on F1") {
  const Document d = f1();
  const auto all = oracle::fixpoint_reach(d.graph, ids({0}));
  CHECK(std::all_of(all.begin(), all.end(), [](bool b) { return b; }));

  const auto none = oracle::fixpoint_reach(d.graph, {});
  CHECK(std::none_of(none.begin(), none.end(), [](bool b) { return b; }));

  const auto every = oracle::fixpoint_reach(d.graph, ids({0, 1, 2, 3}));
  CHECK(std::all_of(every.begin(), every.end(), [](bool b) { return b; }));
}

TEST_CASE("F1 has exactly two trees to S") {
  const Document d = f1();
  const auto e = oracle::enumerate_trees(d.graph, d.sources, *d.graph.find("S"));
  REQUIRE(e.complete);
  REQUIRE(e.trees.size() == 2);
  // Sorted by cost: e3(e1, e2) then e4(e1, e1).
  CHECK(e.trees[0].tree.arc == 3);
  CHECK(e.trees[0].cost == doctest::Approx(3.5));
  CHECK(e.trees[1].tree.arc == 4);
  CHECK(e.trees[1].cost == doctest::Approx(5.0));
  REQUIRE(e.trees[1].tree.children.size() == 2);
  CHECK(e.trees[1].tree.children[0].arc == 1);
  CHECK(e.trees[1].tree.children[1].arc == 1);
}

TEST_CASE("unreachable vertex has no trees and the enumeration is complete") {
  const auto d = parse_document_string("vertex x\nvertex y\narc y <- y @ 1\nsource x\n");
  const auto e = oracle::enumerate_trees(d.graph, d.sources, 1, {.max_cost = 50});
  CHECK(e.complete);
  CHECK(e.trees.empty());
}

TEST_CASE("F2 below 3.5 unrolls the loop twice") {
  const Document d = f2();
  const auto e = oracle::enumerate_trees(d.graph, d.sources, *d.graph.find("S"), {.max_cost = 3.5});
  REQUIRE(e.complete);
  REQUIRE(e.trees.size() == 3);
  CHECK(e.trees[0].cost == doctest::Approx(1));
  CHECK(e.trees[1].cost == doctest::Approx(2));
  CHECK(e.trees[2].cost == doctest::Approx(3));
  CHECK(e.trees[2].tree.children[0].children[0].arc == 1);
}

TEST_CASE("F2 without a cost bound hits the depth limit") {
  const Document d = f2();
  const auto e = oracle::enumerate_trees(d.graph, d.sources, *d.graph.find("S"), {.max_depth = 10});
  CHECK_FALSE(e.complete);
}

TEST_CASE("a source with incoming arcs is both a leaf and an inner node") {
  const auto d = parse_document_string("arc x <- y @ 1\nsource x 5\nsource y 1\n");
  const auto e = oracle::enumerate_trees(d.graph, d.sources, 0);
  REQUIRE(e.trees.size() == 2);
  CHECK(e.trees[0].cost == doctest::Approx(2));
  CHECK(e.trees[1].cost == doctest::Approx(5));
  CHECK(e.trees[1].tree.arc == kNoArc);
}

TEST_CASE("lower-bound pruning does not change the enumerated set") {
  Rng rng(7);
  RandomGraphParams p;
  p.max_vertices = 6;
  p.max_arcs = 9;
  for (int round = 0; round < 150; ++round) {
    const Instance inst = random_instance(rng, p);
    for (VertexId v = 0; v < inst.graph.num_vertices(); ++v) {
      oracle::EnumerationBudget with{.max_depth = 12, .max_trees = 20'000, .max_cost = 6};
      oracle::EnumerationBudget without = with;
      without.prune_with_lower_bounds = false;
      const auto a = oracle::enumerate_trees(inst.graph, inst.sources, v, with);
      const auto b = oracle::enumerate_trees(inst.graph, inst.sources, v, without);
      if (!a.complete || !b.complete) continue;
      std::vector<HyperpathTree> ta, tb;
      for (const auto& t : a.trees) ta.push_back(t.tree);
      for (const auto& t : b.trees) tb.push_back(t.tree);
      std::sort(ta.begin(), ta.end());
      std::sort(tb.begin(), tb.end());
      CHECK(ta == tb);
    }
  }
}

TEST_CASE("enumerated trees are well formed and costed bottom-up") {
  Rng rng(11);
  RandomGraphParams p;
  p.max_vertices = 6;
  p.max_arcs = 10;
  for (int round = 0; round < 100; ++round) {
    const Instance inst = random_instance(rng, p);
    const auto e = oracle::enumerate_trees(inst.graph, inst.sources, inst.target, {.max_cost = 8});
    if (!e.complete) continue;
    for (const auto& t : e.trees) {
      CHECK(t.tree.vertex == inst.target);
      CHECK_NOTHROW(check_tree_shape(inst.graph, t.tree));
      CHECK(oracle::recompute_cost(inst.graph, t.tree, inst.sources) ==
            doctest::Approx(t.cost).epsilon(1e-12));
    }
  }
}

TEST_CASE("min-cost fixpoint matches the cheapest enumerated tree") {
  const Document d = f1();
  const auto c = oracle::fixpoint_min_cost(d.graph, d.sources);
  CHECK(c == std::vector<Cost>{0, 1, 2, 3.5});
}
