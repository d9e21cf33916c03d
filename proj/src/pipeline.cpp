#include "hyperpath/pipeline.hpp"

#include "hyperpath/errors.hpp"

namespace hyperpath {

PipelineResult run_pipeline(const Hypergraph& g, const Query& q, Cost beam) {
  PipelineResult r;
  r.reduction = reduce(g, q);
  if (!r.reduction.target_reachable) {
    throw UnreachableError("target '" + g.name(q.target) + "' unreachable");
  }
  const Hypergraph& reduced = r.reduction.restriction.graph;
  const VertexId target = r.reduction.query.target;
  r.inside = viterbi_inside(reduced, r.reduction.query);
  r.outside = viterbi_outside(reduced, r.inside, target);
  r.prune = prune_relatively_useless(reduced, r.inside, r.outside, target, beam);
  r.pruned = compose(r.reduction.restriction, r.prune.pruned);
  auto mapped = r.pruned.map_query(q);
  if (!mapped) throw InternalError("pruning removed the target");
  r.pruned_query = std::move(*mapped);
  return r;
}

}  // namespace hyperpath
