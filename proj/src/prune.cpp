#include "hyperpath/prune.hpp"

#include <algorithm>
#include <cmath>

#include "hyperpath/errors.hpp"

namespace hyperpath {

Utilities utilities(const Hypergraph& g, const InsideResult& inside, const OutsideResult& outside) {
  const std::size_t n = g.num_vertices();
  if (inside.inside.size() != n || outside.outside.size() != n) {
    throw ValidationError("inside/outside results do not match the hypergraph");
  }
  Utilities u;
  u.vertex.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    const Cost a = outside.outside[v];
    const Cost b = inside.inside[v];
    u.vertex[v] = (a < kInfinity && b < kInfinity) ? a + b : kInfinity;
  }
  u.arc.assign(g.num_arcs() + 1, kInfinity);
  for (ArcIndex i = 1; i <= g.num_arcs(); ++i) {
    const Cost a = outside.outside[g.arc(i).head];
    const Cost c = arc_inside_cost(g, inside, i);
    u.arc[i] = (a < kInfinity && c < kInfinity) ? a + c : kInfinity;
  }
  return u;
}

bool within_threshold(Cost cost, Cost threshold) {
  if (!(cost < kInfinity)) return false;
  if (!(threshold < kInfinity)) return true;
  return cost <= threshold + kBeamRelativeSlack * std::max(1.0, std::abs(threshold));
}

PruneResult prune_relatively_useless(const Hypergraph& g, const InsideResult& inside,
                                     const OutsideResult& outside, VertexId target, Cost beam) {
  if (std::isnan(beam) || beam < 0) throw PreconditionError("beam must be nonnegative");
  if (target >= g.num_vertices()) throw ValidationError("target vertex out of range");
  if (!(inside.inside[target] < kInfinity)) {
    throw UnreachableError("target '" + g.name(target) + "' unreachable");
  }

  PruneResult r;
  r.gamma = utilities(g, inside, outside);
  r.beam = beam;
  r.threshold = inside.inside[target] + beam;

  r.keep_vertex.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    r.keep_vertex[v] = within_threshold(r.gamma.vertex[v], r.threshold);
  }
  r.keep_arc.assign(g.num_arcs() + 1, false);
  for (ArcIndex i = 1; i <= g.num_arcs(); ++i) {
    r.keep_arc[i] = within_threshold(r.gamma.arc[i], r.threshold);
  }
  // restrict_to drops any kept arc whose head or tails were not kept.
  r.pruned = restrict_to(g, r.keep_vertex, r.keep_arc);
  return r;
}

}  // namespace hyperpath
