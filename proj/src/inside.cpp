#include "hyperpath/inside.hpp"

#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace hyperpath {

namespace detail {

void check_inside_inputs(const Hypergraph& g, std::span<const Source> sources) {
  std::unordered_set<VertexId> seen;
  for (const Source& s : sources) {
    if (s.vertex >= g.num_vertices()) throw ValidationError("source vertex out of range");
    if (!seen.insert(s.vertex).second) {
      throw ValidationError("duplicate source '" + g.name(s.vertex) + "'");
    }
    if (!(s.initial_cost >= 0) || std::isinf(s.initial_cost)) {
      throw PreconditionError("source '" + g.name(s.vertex) +
                              "': initial cost must be finite and nonnegative");
    }
  }
  // Hypergraph construction already rejects negative lengths; this catches
  // graphs assembled some other way.
  for (ArcIndex i = 1; i <= g.num_arcs(); ++i) {
    if (!(g.arc(i).length >= 0)) {
      throw PreconditionError("arc " + std::to_string(i) + ": negative length");
    }
  }
}

}  // namespace detail

InsideResult viterbi_inside(const Hypergraph& g, const Query& q, const InsideOptions& options,
                            InsideStats* stats) {
  return viterbi_inside<AdditiveCost>(g, std::span<const Source>(q.sources), options, stats);
}

namespace {

class TreeBuilder {
 public:
  TreeBuilder(const Hypergraph& g, const InsideResult& r, std::size_t max_nodes)
      : g_(g), r_(r), max_nodes_(max_nodes), on_path_(g.num_vertices(), false) {}

  HyperpathTree build(VertexId v) {
    if (++nodes_ > max_nodes_) {
      throw PreconditionError("best tree exceeds " + std::to_string(max_nodes_) + " nodes");
    }
    HyperpathTree t;
    t.vertex = v;
    t.arc = r_.pi[v];
    if (t.arc == kNoArc) {
      if (!(r_.inside[v] < kInfinity)) {
        throw InternalError("pi reaches unreached vertex '" + g_.name(v) + "'");
      }
      return t;
    }
    if (t.arc > g_.num_arcs() || g_.arc(t.arc).head != v) {
      throw InternalError("pi[" + g_.name(v) + "] is not an arc into it");
    }
    if (on_path_[v]) throw InternalError("cyclic predecessor chain at '" + g_.name(v) + "'");
    on_path_[v] = true;
    const auto& tails = g_.arc(t.arc).tails;
    t.children.reserve(tails.size());
    for (VertexId u : tails) t.children.push_back(build(u));
    on_path_[v] = false;
    return t;
  }

 private:
  const Hypergraph& g_;
  const InsideResult& r_;
  std::size_t max_nodes_;
  std::size_t nodes_ = 0;
  std::vector<bool> on_path_;
};

}  // namespace

HyperpathTree extract_best_tree(const Hypergraph& g, const InsideResult& r, VertexId v,
                                std::size_t max_nodes) {
  if (v >= g.num_vertices()) throw ValidationError("vertex out of range");
  if (r.inside.size() != g.num_vertices() || r.pi.size() != g.num_vertices()) {
    throw ValidationError("inside result does not match the hypergraph");
  }
  if (!(r.inside[v] < kInfinity)) throw UnreachableError("'" + g.name(v) + "' is unreachable");
  return TreeBuilder(g, r, max_nodes).build(v);
}

void check_tree_shape(const Hypergraph& g, const HyperpathTree& tree) {
  if (tree.vertex >= g.num_vertices()) throw ValidationError("tree vertex out of range");
  if (tree.arc == kNoArc) {
    if (!tree.children.empty()) throw ValidationError("leaf with children");
    return;
  }
  if (tree.arc > g.num_arcs()) throw ValidationError("tree arc out of range");
  const Hyperarc& a = g.arc(tree.arc);
  if (a.head != tree.vertex) throw ValidationError("arc head differs from node vertex");
  if (a.tails.size() != tree.children.size()) throw ValidationError("child count differs from tails");
  for (std::size_t k = 0; k < a.tails.size(); ++k) {
    if (tree.children[k].vertex != a.tails[k]) throw ValidationError("child vertex differs from tail");
    check_tree_shape(g, tree.children[k]);
  }
}

namespace {

Cost cost_of(const Hypergraph& g, const HyperpathTree& t,
             const std::unordered_map<VertexId, Cost>& initial) {
  if (t.arc == kNoArc) {
    auto it = initial.find(t.vertex);
    if (it == initial.end()) throw ValidationError("leaf '" + g.name(t.vertex) + "' is not a source");
    return it->second;
  }
  Cost c = g.arc(t.arc).length;
  for (const auto& child : t.children) c += cost_of(g, child, initial);
  return c;
}

void format_into(const Hypergraph& g, const HyperpathTree& t, std::string& out) {
  if (t.arc == kNoArc) {
    out += g.name(t.vertex);
    return;
  }
  out += '(';
  out += std::to_string(t.arc);
  for (const auto& child : t.children) {
    out += ' ';
    format_into(g, child, out);
  }
  out += ')';
}

}  // namespace

Cost tree_cost(const Hypergraph& g, const HyperpathTree& tree, std::span<const Source> sources) {
  check_tree_shape(g, tree);
  std::unordered_map<VertexId, Cost> initial;
  for (const Source& s : sources) initial.emplace(s.vertex, s.initial_cost);
  return cost_of(g, tree, initial);
}

std::size_t tree_size(const HyperpathTree& tree) {
  std::size_t n = 1;
  for (const auto& c : tree.children) n += tree_size(c);
  return n;
}

std::string format_tree(const Hypergraph& g, const HyperpathTree& tree) {
  std::string out;
  format_into(g, tree, out);
  return out;
}

}  // namespace hyperpath
