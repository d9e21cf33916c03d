#include "hyperpath/reachability.hpp"

#include <vector>

#include "hyperpath/errors.hpp"

namespace hyperpath {

VertexMask reach_from(const Hypergraph& g, std::span<const VertexId> sources,
                      TraversalStats* stats) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_arcs();
  VertexMask reached(n, false);

  std::vector<std::uint32_t> remaining(m + 1, 0);
  for (ArcIndex i = 1; i <= m; ++i) {
    remaining[i] = static_cast<std::uint32_t>(g.distinct_tails(i).size());
  }

  std::vector<VertexId> stack;
  auto reach = [&](VertexId v) {
    if (!reached[v]) {
      reached[v] = true;
      stack.push_back(v);
    }
  };
  for (VertexId x : sources) {
    if (x >= n) throw ValidationError("source vertex out of range");
    reach(x);
  }

  std::size_t slots = 0;
  while (!stack.empty()) {
    VertexId y = stack.back();
    stack.pop_back();
    for (ArcIndex i : g.arcs_with_tail(y)) {
      ++slots;
      const VertexId head = g.arc(i).head;
      if (reached[head]) continue;
      if (--remaining[i] == 0) reach(head);
    }
  }
  if (stats) stats->tail_slots += slots;
  return reached;
}

VertexMask reach_to(const Hypergraph& g, VertexId target, TraversalStats* stats) {
  const std::size_t n = g.num_vertices();
  if (target >= n) throw ValidationError("target vertex out of range");
  VertexMask used(n, false);
  std::vector<VertexId> stack{target};
  used[target] = true;

  std::size_t slots = 0;
  std::size_t arcs = 0;
  while (!stack.empty()) {
    VertexId y = stack.back();
    stack.pop_back();
    for (ArcIndex i : g.arcs_with_head(y)) {
      ++arcs;
      for (const Tail& t : g.distinct_tails(i)) {
        ++slots;
        if (!used[t.vertex]) {
          used[t.vertex] = true;
          stack.push_back(t.vertex);
        }
      }
    }
  }
  if (stats) {
    stats->tail_slots += slots;
    stats->arcs_scanned += arcs;
  }
  return used;
}

namespace {

Reduction unreachable(const Hypergraph& g) {
  Reduction r;
  r.restriction = restrict_to(g, VertexMask(g.num_vertices(), false));
  r.query.target = kNoVertex;
  r.target_reachable = false;
  return r;
}

}  // namespace

Reduction reduce(const Hypergraph& g, const Query& q, PassOrder order) {
  q.validate(g);
  const auto sources = q.source_vertices();

  Restriction combined;
  if (order == PassOrder::kForwardFirst) {
    Restriction forward = restrict_to(g, reach_from(g, sources));
    auto fq = forward.map_query(q);
    if (!fq) return unreachable(g);
    Restriction backward = restrict_to(forward.graph, reach_to(forward.graph, fq->target));
    combined = compose(forward, backward);
  } else {
    Restriction backward = restrict_to(g, reach_to(g, q.target));
    auto bq = backward.map_query(q);
    Restriction forward =
        restrict_to(backward.graph, reach_from(backward.graph, bq->source_vertices()));
    combined = compose(backward, forward);
  }

  auto mapped = combined.map_query(q);
  if (!mapped) return unreachable(g);
  Reduction r;
  r.restriction = std::move(combined);
  r.query = std::move(*mapped);
  r.target_reachable = true;
  return r;
}

}  // namespace hyperpath
