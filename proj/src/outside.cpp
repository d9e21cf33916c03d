#include "hyperpath/outside.hpp"

#include <functional>
#include <queue>
#include <utility>

#include "hyperpath/errors.hpp"

namespace hyperpath {

Cost arc_inside_cost(const Hypergraph& g, const InsideResult& inside, ArcIndex i) {
  Cost c = g.arc(i).length;
  for (const Tail& t : g.distinct_tails(i)) {
    const Cost ct = inside.inside[t.vertex];
    if (!(ct < kInfinity)) return kInfinity;
    c += t.multiplicity * ct;
  }
  return c;
}

OutsideResult viterbi_outside(const Hypergraph& g, const InsideResult& inside, VertexId target,
                              const OutsideOptions& options, OutsideStats* stats) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_arcs();
  if (target >= n) throw ValidationError("target vertex out of range");
  if (inside.inside.size() != n) throw ValidationError("inside result does not match the hypergraph");
  if (!(inside.inside[target] < kInfinity)) {
    throw UnreachableError("target '" + g.name(target) + "' unreachable");
  }

  // Per-arc cost with every tail at its best inside cost; holding out one
  // occurrence of t is then a single subtraction.
  std::vector<Cost> full(m + 1, kInfinity);
  for (ArcIndex i = 1; i <= m; ++i) full[i] = arc_inside_cost(g, inside, i);

  OutsideResult r{std::vector<Cost>(n, kInfinity), std::vector<ArcIndex>(n, kNoArc)};
  using Entry = std::pair<Cost, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::vector<bool> done(n, false);
  std::vector<bool> queued(n, false);

  r.outside[target] = 0;
  queue.emplace(0, target);
  queued[target] = true;

  OutsideStats local;
  Cost last = -kInfinity;
  while (!queue.empty()) {
    auto [key, x] = queue.top();
    queue.pop();
    if (done[x] || key > r.outside[x]) continue;
    done[x] = true;
    queued[x] = false;
    ++local.pops;
    if (key < last) local.nondecreasing_pops = false;
    last = key;

    for (ArcIndex i : g.arcs_with_head(x)) {
      if (!(full[i] < kInfinity)) continue;
      const Cost c = r.outside[x] + full[i];
      for (const Tail& t : g.distinct_tails(i)) {
        ++local.relaxations;
        const Cost proposed = c - inside.inside[t.vertex];
        if (!(proposed < r.outside[t.vertex])) continue;
        const bool insert = options.guard == QueueGuard::kRelaxedTail
                                ? r.outside[t.vertex] == kInfinity
                                : r.outside[x] == kInfinity;
        r.outside[t.vertex] = proposed;
        r.psi[t.vertex] = i;
        // Decrease-key only affects vertices still waiting in the queue.
        if (insert || queued[t.vertex]) {
          queue.emplace(proposed, t.vertex);
          queued[t.vertex] = true;
        }
      }
    }
  }
  if (stats) *stats = local;
  return r;
}

}  // namespace hyperpath
