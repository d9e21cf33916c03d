#pragma once

// Single-source-set, multi-destination shortest hyperpath-trees: Knuth's
// generalization of Dijkstra to hypergraphs with superior cost functions.

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperpath/errors.hpp"
#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

// Per-arc cost accumulator. bind() is called once per distinct tail with the
// tail's final inside cost; inf() is a lower bound on the arc's cost given the
// tails bound so far, and the exact cost once all are bound. Implementations
// must be superior: the final cost is >= every bound tail cost.
template <class F>
concept SuperiorCostFunction = requires(F f, const F cf, const Hypergraph& g, ArcIndex i,
                                        const Tail& t, Cost c) {
  { F(g, i) };
  f.bind(t, c);
  { cf.inf() } -> std::convertible_to<Cost>;
};

// l_e + sum of multiplicity * tail cost. Superior as long as lengths and
// costs are nonnegative.
class AdditiveCost {
 public:
  AdditiveCost(const Hypergraph& g, ArcIndex i) : accumulated_(g.arc(i).length) {}

  void bind(const Tail& tail, Cost cost) { accumulated_ += tail.multiplicity * cost; }
  Cost inf() const { return accumulated_; }

 private:
  Cost accumulated_;
};

struct InsideResult {
  std::vector<Cost> inside;  // kInfinity if unreached
  std::vector<ArcIndex> pi;  // cheapest arc into v; kNoArc for unimproved sources and unreached
};

struct InsideOptions {
  // Skip BIND when the arc's lower bound already can't beat its head. Pure
  // optimization for additive costs.
  bool bound_guard = true;
};

struct InsideStats {
  std::size_t pops = 0;
  std::size_t stale_pops = 0;
  std::size_t binds = 0;
  std::size_t improvements = 0;
  bool nondecreasing_pops = true;
};

namespace detail {
void check_inside_inputs(const Hypergraph& g, std::span<const Source> sources);
}

template <SuperiorCostFunction F = AdditiveCost>
InsideResult viterbi_inside(const Hypergraph& g, std::span<const Source> sources,
                            const InsideOptions& options = {}, InsideStats* stats = nullptr) {
  detail::check_inside_inputs(g, sources);
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_arcs();

  InsideResult r{std::vector<Cost>(n, kInfinity), std::vector<ArcIndex>(n, kNoArc)};
  std::vector<std::uint32_t> remaining(m + 1, 0);
  std::vector<F> cost;
  cost.reserve(m);
  for (ArcIndex i = 1; i <= m; ++i) {
    remaining[i] = static_cast<std::uint32_t>(g.distinct_tails(i).size());
    cost.emplace_back(g, i);
  }

  // Binary heap; decrease-key is a re-insert, stale entries are skipped on
  // extraction. Equal costs pop the lower vertex id first.
  using Entry = std::pair<Cost, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::vector<bool> done(n, false);
  for (const Source& s : sources) {
    r.inside[s.vertex] = s.initial_cost;
    queue.emplace(s.initial_cost, s.vertex);
  }

  InsideStats local;
  Cost last = -kInfinity;
  while (!queue.empty()) {
    auto [key, y] = queue.top();
    queue.pop();
    if (done[y] || key > r.inside[y]) {
      ++local.stale_pops;
      continue;
    }
    done[y] = true;
    ++local.pops;
    if (key < last) local.nondecreasing_pops = false;
    last = key;

    const Cost cy = r.inside[y];
    const auto arcs = g.arcs_with_tail(y);
    const auto mults = g.tail_multiplicities(y);
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      const ArcIndex i = arcs[k];
      const VertexId head = g.arc(i).head;
      F& f = cost[i - 1];
      if (options.bound_guard && !(f.inf() < r.inside[head])) continue;
      f.bind(Tail{y, mults[k]}, cy);
      ++local.binds;
      if (--remaining[i] != 0) continue;
      const Cost c = f.inf();
      if (c < r.inside[head]) {
        r.inside[head] = c;
        r.pi[head] = i;
        queue.emplace(c, head);
        ++local.improvements;
      }
    }
  }
  if (stats) *stats = local;
  return r;
}

InsideResult viterbi_inside(const Hypergraph& g, const Query& q, const InsideOptions& options = {},
                            InsideStats* stats = nullptr);

// Ordered hyperpath-tree. Inner nodes carry the arc used to prove `vertex`,
// with one child per tail occurrence in tail order; leaves (arc == kNoArc)
// are sources taken at their initial cost.
struct HyperpathTree {
  VertexId vertex = 0;
  ArcIndex arc = kNoArc;
  std::vector<HyperpathTree> children;

  friend bool operator==(const HyperpathTree&, const HyperpathTree&) = default;
  friend std::strong_ordering operator<=>(const HyperpathTree&, const HyperpathTree&) = default;
};

// Expands pi from v. Throws UnreachableError if inside[v] is infinite,
// InternalError if pi is inconsistent, PreconditionError if the tree would
// exceed max_nodes (shared subtrees are copied, so trees can be exponential
// in the graph size).
HyperpathTree extract_best_tree(const Hypergraph& g, const InsideResult& r, VertexId v,
                                std::size_t max_nodes = 10'000'000);

// Bottom-up additive cost; leaves cost their source's initial cost. Throws
// ValidationError if the tree is malformed or a leaf is not a source.
Cost tree_cost(const Hypergraph& g, const HyperpathTree& tree, std::span<const Source> sources);

// Throws ValidationError unless every inner node's arc has head == vertex and
// children matching the arc's tails in order.
void check_tree_shape(const Hypergraph& g, const HyperpathTree& tree);

std::size_t tree_size(const HyperpathTree& tree);

// "(3 (1 omega) (2 omega))": arc index followed by children; leaves print
// the source vertex name.
std::string format_tree(const Hypergraph& g, const HyperpathTree& tree);

}  // namespace hyperpath
