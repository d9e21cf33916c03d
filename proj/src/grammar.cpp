#include "hyperpath/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <unordered_set>

#include "hyperpath/errors.hpp"

namespace hyperpath {

namespace {

std::string production_name(const Production& p) {
  return "production " + std::to_string(p.index) + " (" + p.lhs + " -> " + format_rhs(p.rhs) + ")";
}

void collect_yield(const Wrtg& g, const TreeNode& node, std::vector<std::string>& out) {
  if (node.children.empty()) {
    if (g.is_nonterminal(node.label)) out.push_back(node.label);
    return;
  }
  for (const auto& c : node.children) collect_yield(g, c, out);
}

void collect_alphabet(const Wrtg& g, const TreeNode& node, std::set<std::string>& out) {
  if (!node.children.empty() || !g.is_nonterminal(node.label)) out.insert(node.label);
  for (const auto& c : node.children) collect_alphabet(g, c, out);
}

void format_node(const TreeNode& n, std::string& out) {
  out += n.label;
  if (n.children.empty()) return;
  out += '(';
  for (std::size_t k = 0; k < n.children.size(); ++k) {
    if (k) out += ", ";
    format_node(n.children[k], out);
  }
  out += ')';
}

bool is_label_with_prefix(std::string_view s, std::string_view prefix) {
  if (s.size() <= prefix.size() || s.substr(0, prefix.size()) != prefix) return false;
  return std::all_of(s.begin() + prefix.size(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string label_prefix(const Wrtg& g) {
  std::string prefix = "p";
  while (std::any_of(g.nonterminals().begin(), g.nonterminals().end(),
                     [&](const std::string& nt) { return is_label_with_prefix(nt, prefix); })) {
    prefix.insert(prefix.begin(), '_');
  }
  return prefix;
}

}  // namespace

Wrtg::Wrtg(std::string start, std::vector<Production> productions)
    : start_(std::move(start)), productions_(std::move(productions)) {
  std::unordered_set<std::size_t> indices;
  for (const auto& p : productions_) {
    if (p.index == 0) throw ValidationError("production indices are 1-based");
    if (!indices.insert(p.index).second) {
      throw ValidationError("duplicate production index " + std::to_string(p.index));
    }
    if (!(p.weight > 0) || std::isinf(p.weight)) {
      throw ValidationError(production_name(p) + ": weight must be positive and finite");
    }
    if (p.lhs.empty()) throw ValidationError(production_name(p) + ": empty lhs");
    if (nonterminal_set_.insert(p.lhs).second) nonterminals_.push_back(p.lhs);
  }
  if (!is_nonterminal(start_)) {
    throw ValidationError("start symbol '" + start_ + "' has no productions");
  }
}

bool Wrtg::is_nonterminal(std::string_view s) const {
  return nonterminal_set_.find(s) != nonterminal_set_.end();
}

std::vector<std::string> Wrtg::alphabet() const {
  std::set<std::string> out;
  for (const auto& p : productions_) {
    for (const auto& n : p.rhs) collect_alphabet(*this, n, out);
  }
  return {out.begin(), out.end()};
}

const Production* Wrtg::find_production(std::size_t index) const {
  for (const auto& p : productions_) {
    if (p.index == index) return &p;
  }
  return nullptr;
}

std::vector<std::string> nonterminal_yield(const Wrtg& g, const Production& p) {
  std::vector<std::string> out;
  for (const auto& n : p.rhs) collect_yield(g, n, out);
  return out;
}

std::string production_label(const Wrtg& g, std::size_t index) {
  return label_prefix(g) + std::to_string(index);
}

Wrtg derivation_grammar(const Wrtg& g) {
  const std::string prefix = label_prefix(g);
  std::vector<Production> out;
  out.reserve(g.productions().size());
  for (const auto& p : g.productions()) {
    TreeNode root{prefix + std::to_string(p.index), {}};
    for (auto& nt : nonterminal_yield(g, p)) root.children.push_back({std::move(nt), {}});
    out.push_back({p.index, p.lhs, {std::move(root)}, p.weight});
  }
  return Wrtg(g.start(), std::move(out));
}

GrammarHypergraph to_hypergraph(const Wrtg& g) {
  GrammarHypergraph out;
  auto& map = out.map;

  std::string sink(kSinkName);
  for (int k = 1; g.is_nonterminal(sink); ++k) sink = std::string(kSinkName) + std::to_string(k);

  std::vector<std::string> names;
  names.push_back(sink);
  map.sink = 0;
  map.vertex_to_nonterminal.push_back("");
  for (const auto& nt : g.nonterminals()) {
    map.nonterminal_to_vertex.emplace(nt, static_cast<VertexId>(names.size()));
    map.vertex_to_nonterminal.push_back(nt);
    names.push_back(nt);
  }

  std::vector<Hyperarc> arcs;
  map.arc_to_production.assign(1, 0);
  for (const auto& p : g.productions()) {
    if (!(p.weight > 0) || p.weight > 1) {
      throw ValidationError(production_name(p) + ": weight must lie in (0, 1]");
    }
    Hyperarc a;
    a.head = map.nonterminal_to_vertex.at(p.lhs);
    for (const auto& nt : nonterminal_yield(g, p)) a.tails.push_back(map.nonterminal_to_vertex.at(nt));
    if (a.tails.empty()) a.tails.push_back(map.sink);
    a.length = 0.0 - std::log(p.weight);
    arcs.push_back(std::move(a));
    const auto arc = static_cast<ArcIndex>(arcs.size());
    map.arc_to_production.push_back(p.index);
    map.production_to_arc.emplace(p.index, arc);
  }

  out.graph = Hypergraph::from_arcs(std::move(names), std::move(arcs));
  out.query.sources = {{map.sink, 0}};
  out.query.target = map.nonterminal_to_vertex.at(g.start());
  return out;
}

Wrtg from_pruned(const Wrtg& g, const GrammarHypergraphMap& map, const Restriction& pruned) {
  const VertexId start = map.nonterminal_to_vertex.at(g.start());
  if (start >= pruned.vertex_to_new.size() || pruned.vertex_to_new[start] == kNoVertex) {
    throw UnreachableError("language emptied: start symbol '" + g.start() + "' was pruned");
  }
  std::unordered_set<std::size_t> kept;
  for (std::size_t j = 1; j < pruned.arc_to_old.size(); ++j) {
    const ArcIndex old = pruned.arc_to_old[j];
    if (old == kNoArc || old >= map.arc_to_production.size()) {
      throw ValidationError("pruned hypergraph is not a restriction of the grammar's hypergraph");
    }
    kept.insert(map.arc_to_production[old]);
  }
  std::vector<Production> out;
  for (const auto& p : g.productions()) {
    if (kept.count(p.index)) out.push_back(p);
  }
  if (out.empty()) {
    throw UnreachableError("language emptied: no production survived");
  }
  Wrtg result(g.start(), std::move(out));
  // A surviving production must not mention a nonterminal that lost all its
  // productions; that would silently turn it into a terminal.
  for (const auto& p : result.productions()) {
    for (const auto& nt : nonterminal_yield(g, p)) {
      if (!result.is_nonterminal(nt)) {
        throw InternalError(production_name(p) + " refers to pruned nonterminal '" + nt + "'");
      }
    }
  }
  return result;
}

namespace {

DerivationTree relabel(const GrammarHypergraphMap& map, const HyperpathTree& t) {
  DerivationTree d;
  d.production = map.arc_to_production.at(t.arc);
  for (const auto& c : t.children) {
    if (c.arc == kNoArc) {
      if (c.vertex != map.sink) throw ValidationError("tree leaf is not the sink");
      continue;
    }
    d.children.push_back(relabel(map, c));
  }
  return d;
}

void format_derivation_into(const std::string& prefix, const DerivationTree& t, std::string& out) {
  out += prefix + std::to_string(t.production);
  if (t.children.empty()) return;
  out += '(';
  for (std::size_t k = 0; k < t.children.size(); ++k) {
    if (k) out += ", ";
    format_derivation_into(prefix, t.children[k], out);
  }
  out += ')';
}

}  // namespace

Derivation to_derivation(const GrammarHypergraph& hg, const HyperpathTree& tree) {
  if (tree.arc == kNoArc) throw ValidationError("a bare sink leaf is not a derivation");
  Derivation d;
  d.cost = tree_cost(hg.graph, tree, hg.query.sources);
  d.tree = relabel(hg.map, tree);
  d.weight = std::exp(-d.cost);
  return d;
}

double derivation_weight(const Wrtg& g, const DerivationTree& tree) {
  const Production* p = g.find_production(tree.production);
  if (!p) throw ValidationError("unknown production " + std::to_string(tree.production));
  double w = p->weight;
  for (const auto& c : tree.children) w *= derivation_weight(g, c);
  return w;
}

std::string format_derivation(const Wrtg& g, const DerivationTree& tree) {
  std::string out;
  format_derivation_into(label_prefix(g), tree, out);
  return out;
}

std::string format_rhs(const std::vector<TreeNode>& rhs) {
  std::string out;
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    if (k) out += ' ';
    format_node(rhs[k], out);
  }
  return out;
}

}  // namespace hyperpath
