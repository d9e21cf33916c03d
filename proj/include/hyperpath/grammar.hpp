#pragma once

// Weighted regular tree grammars (and CFGs, as the special case of flat
// right-hand sides) and their reduction to ordered multi-hypergraphs.
//
// A production l -> r with weight w becomes an arc with head l, one tail
// occurrence per nonterminal leaf of r (left to right), or the fresh sink
// vertex when r has none, and length -ln w. The hyperpath-trees from the
// sink to the start symbol are then exactly the derivation trees, with
// cost = -ln(product of production weights).

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpath/hypergraph.hpp"
#include "hyperpath/inside.hpp"

namespace hyperpath {

struct TreeNode {
  std::string label;
  std::vector<TreeNode> children;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct Production {
  std::size_t index = 0;  // 1-based, stable across pruning
  std::string lhs;
  // A sequence of trees. RTG productions have a single tree; CFG productions
  // a sequence of leaves.
  std::vector<TreeNode> rhs;
  double weight = 1;

  friend bool operator==(const Production&, const Production&) = default;
};

class Wrtg {
 public:
  Wrtg() = default;

  // Nonterminals are the left-hand sides, in order of first appearance.
  // Throws ValidationError on a non-positive or non-finite weight, duplicate
  // production indices, or a start symbol with no productions.
  Wrtg(std::string start, std::vector<Production> productions);

  const std::string& start() const noexcept { return start_; }
  const std::vector<Production>& productions() const noexcept { return productions_; }
  const std::vector<std::string>& nonterminals() const noexcept { return nonterminals_; }
  bool is_nonterminal(std::string_view s) const;

  // Labels of rhs nodes that are not nonterminal leaves, sorted.
  std::vector<std::string> alphabet() const;

  const Production* find_production(std::size_t index) const;

 private:
  std::string start_;
  std::vector<Production> productions_;
  std::vector<std::string> nonterminals_;
  std::set<std::string, std::less<>> nonterminal_set_;
};

// Nonterminal leaves of the production's rhs, left to right.
std::vector<std::string> nonterminal_yield(const Wrtg& g, const Production& p);

// Grammar over production labels whose trees are the derivation trees of g:
// each (l, r, w) becomes (l, p(yield_N(r)), w) with p the production's label.
Wrtg derivation_grammar(const Wrtg& g);

// Label used for production `index` by derivation_grammar().
std::string production_label(const Wrtg& g, std::size_t index);

struct GrammarHypergraphMap {
  std::vector<std::size_t> arc_to_production;  // by arc index, [0] unused
  std::map<std::size_t, ArcIndex> production_to_arc;
  std::map<std::string, VertexId, std::less<>> nonterminal_to_vertex;
  std::vector<std::string> vertex_to_nonterminal;  // empty string for the sink
  VertexId sink = 0;
};

struct GrammarHypergraph {
  Hypergraph graph;
  Query query;  // source: sink at cost 0; target: start
  GrammarHypergraphMap map;
};

// Default spelling of the sink vertex; suffixed with a number on collision.
inline constexpr std::string_view kSinkName = "_OMEGA_";

// Throws ValidationError citing the production when a weight is outside (0, 1].
GrammarHypergraph to_hypergraph(const Wrtg& g);

// Grammar with exactly the productions whose arcs survive in `pruned` (a
// restriction of to_hypergraph(g).graph). Indices and weights are preserved.
// Throws UnreachableError if the start symbol was pruned.
Wrtg from_pruned(const Wrtg& g, const GrammarHypergraphMap& map, const Restriction& pruned);

struct DerivationTree {
  std::size_t production = 0;
  std::vector<DerivationTree> children;

  friend bool operator==(const DerivationTree&, const DerivationTree&) = default;
  friend std::strong_ordering operator<=>(const DerivationTree&, const DerivationTree&) = default;
};

struct Derivation {
  DerivationTree tree;
  Cost cost = 0;
  double weight = 1;  // exp(-cost)
};

// Relabels a hyperpath-tree of to_hypergraph(g).graph to production indices,
// dropping sink leaves.
Derivation to_derivation(const GrammarHypergraph& hg, const HyperpathTree& tree);

// Product of production weights over the tree.
double derivation_weight(const Wrtg& g, const DerivationTree& tree);

// "p3(p1, p2)" using production_label().
std::string format_derivation(const Wrtg& g, const DerivationTree& tree);

// Grammar text format:
//
//   # comment
//   start S                         (optional; default: first lhs)
//   0.5: S -> sigma(A, a, B)        (RTG tree)
//   0.25: NP -> det N               (CFG string)
//
// Nonterminals are the identifiers appearing on some lhs; everything else
// is a terminal. Production indices follow file order.
Wrtg parse_grammar(std::istream& in, const std::string& source_name = "<input>");
Wrtg parse_grammar_string(std::string_view text, const std::string& source_name = "<input>");
Wrtg read_grammar_file(const std::string& path);
void write_grammar(std::ostream& out, const Wrtg& g);
std::string grammar_to_text(const Wrtg& g);

std::string format_rhs(const std::vector<TreeNode>& rhs);

}  // namespace hyperpath
