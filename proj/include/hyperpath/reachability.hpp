#pragma once

#include <cstddef>
#include <span>

#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

// Counts arc-tail slot visits so tests can check the linear-time bound.
struct TraversalStats {
  std::size_t tail_slots = 0;
  std::size_t arcs_scanned = 0;
};

// reachfrom[v] is true iff X ~> v: v is a source, or some arc with head v has
// every tail reachable. Each arc keeps a count of its distinct tails that are
// not yet reached and fires when it hits zero. O(total size).
VertexMask reach_from(const Hypergraph& g, std::span<const VertexId> sources,
                      TraversalStats* stats = nullptr);

// Marks the target and, transitively, every tail of every arc whose head is
// marked. Sound as "lies on some hyperpath-tree to target" only when every
// vertex of g is already reachable from the sources; not checked here.
VertexMask reach_to(const Hypergraph& g, VertexId target, TraversalStats* stats = nullptr);

enum class PassOrder {
  kForwardFirst,
  // Backward pass on the unrestricted graph, then the forward pass. Wrong in
  // general; exists to demonstrate that the pass order matters.
  kBackwardFirst,
};

struct Reduction {
  // Maps the input graph to the reduced one.
  Restriction restriction;
  // The query renumbered into the reduced graph. Empty sources when the
  // target is unreachable.
  Query query;
  bool target_reachable = false;
};

// G'' = G'<reach_to(G', y)> with G' = G<reach_from(G, X)>: keeps exactly the
// vertices and arcs used by some hyperpath-tree X ~> y. If y is unreachable
// the result is the empty hypergraph.
Reduction reduce(const Hypergraph& g, const Query& q, PassOrder order = PassOrder::kForwardFirst);

}  // namespace hyperpath
