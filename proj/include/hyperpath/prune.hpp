#pragma once

// Relative-uselessness pruning. The utility of a vertex or arc is the cost of
// the cheapest hyperpath-tree X ~> y that uses it:
//
//   gamma[v] = outside[v] + inside[v]
//   gamma[e] = outside[head(e)] + length(e) + sum multiplicity * inside[t]
//
// and an element is kept when its utility is within `beam` of inside[y].

#include <vector>

#include "hyperpath/hypergraph.hpp"
#include "hyperpath/inside.hpp"
#include "hyperpath/outside.hpp"

namespace hyperpath {

// Relative slack on the keep threshold: utilities are computed by different
// summation orders than tree costs, so an element on an optimal tree may come
// out a few ulps above inside[y].
inline constexpr double kBeamRelativeSlack = 1e-9;

struct Utilities {
  std::vector<Cost> vertex;  // by vertex id
  std::vector<Cost> arc;     // by arc index, [0] unused
};

Utilities utilities(const Hypergraph& g, const InsideResult& inside, const OutsideResult& outside);

struct PruneResult {
  Utilities gamma;
  std::vector<bool> keep_vertex;
  std::vector<bool> keep_arc;  // [0] unused
  Cost beam = 0;
  Cost threshold = 0;  // inside[y] + beam
  // g restricted to kept vertices, then filtered to kept arcs.
  Restriction pruned;
};

// keep[x] iff gamma[x] is finite and gamma[x] <= inside[y] + beam (with
// kBeamRelativeSlack). beam may be kInfinity, which keeps exactly the
// elements used by some hyperpath-tree. Throws PreconditionError on a
// negative or NaN beam, UnreachableError if inside[y] is infinite.
PruneResult prune_relatively_useless(const Hypergraph& g, const InsideResult& inside,
                                     const OutsideResult& outside, VertexId target, Cost beam);

// True iff cost is within the beam threshold, using the same slack as the pruner.
bool within_threshold(Cost cost, Cost threshold);

}  // namespace hyperpath
