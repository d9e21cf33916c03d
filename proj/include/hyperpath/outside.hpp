#pragma once

// Viterbi outside costs: the cheapest way to complete a hyperpath-tree X ~> v
// into one reaching the target, with every omitted sibling filled in by its
// best inside tree. Runs Dijkstra on the implicit reversed monadic graph that
// has one edge head -> tail per (arc, distinct tail) pair, weighted by the
// arc's length plus the inside costs of all the other tail occurrences.

#include <cstddef>

#include "hyperpath/hypergraph.hpp"
#include "hyperpath/inside.hpp"

namespace hyperpath {

struct OutsideResult {
  std::vector<Cost> outside;  // kInfinity if no completion exists
  std::vector<ArcIndex> psi;  // arc through which v's outside cost was achieved
};

enum class QueueGuard {
  // Insert t when outside[t] was infinite, otherwise decrease its key.
  kRelaxedTail,
  // The guard as printed in the original pseudocode, testing outside[head]
  // instead of outside[t]. Since the head was just extracted its cost is
  // finite, so newly improved tails are never queued. Kept only for tests.
  kLiteralHead,
};

struct OutsideOptions {
  QueueGuard guard = QueueGuard::kRelaxedTail;
};

struct OutsideStats {
  std::size_t pops = 0;
  std::size_t relaxations = 0;
  bool nondecreasing_pops = true;
};

// Arcs with an unreached tail (infinite inside) are never relaxed, so the
// graph need not be reduced first. Throws UnreachableError if
// inside[target] is infinite.
OutsideResult viterbi_outside(const Hypergraph& g, const InsideResult& inside, VertexId target,
                              const OutsideOptions& options = {}, OutsideStats* stats = nullptr);

// length + sum of multiplicity * inside[t] over the arc's tails; kInfinity if
// any tail is unreached.
Cost arc_inside_cost(const Hypergraph& g, const InsideResult& inside, ArcIndex i);

}  // namespace hyperpath
