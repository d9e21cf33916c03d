#pragma once

#include "hyperpath/hypergraph.hpp"
#include "hyperpath/inside.hpp"
#include "hyperpath/outside.hpp"
#include "hyperpath/prune.hpp"
#include "hyperpath/reachability.hpp"

namespace hyperpath {

// reduce -> inside -> outside -> prune. Everything except `pruned` and
// `pruned_query` is expressed on the reduced graph.
struct PipelineResult {
  Reduction reduction;
  InsideResult inside;
  OutsideResult outside;
  PruneResult prune;
  Restriction pruned;  // input graph -> pruned graph
  Query pruned_query;  // in the pruned graph's numbering

  Cost best() const { return inside.inside[reduction.query.target]; }
};

// Throws UnreachableError if the target cannot be reached.
PipelineResult run_pipeline(const Hypergraph& g, const Query& q, Cost beam);

}  // namespace hyperpath
