#include "hyperpath/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "hyperpath/errors.hpp"

namespace hyperpath {

namespace {

std::string arc_label(std::size_t i) { return "arc " + std::to_string(i); }

void check_name(const std::string& name, VertexId v) {
  if (name == "<-" || name == "@") {
    throw ValidationError("vertex " + std::to_string(v) + ": reserved name '" + name + "'");
  }
  for (char c : name) {
    if (c == '*' || c == '#' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      throw ValidationError("vertex " + std::to_string(v) + ": name '" + name +
                            "' contains whitespace, '*' or '#'");
    }
  }
}

void check_arc(const Hyperarc& arc, std::size_t i, std::size_t n) {
  if (arc.head >= n) {
    throw ValidationError(arc_label(i) + ": head " + std::to_string(arc.head) + " out of range");
  }
  if (arc.tails.empty()) throw ValidationError(arc_label(i) + ": empty tail set");
  for (VertexId t : arc.tails) {
    if (t >= n) throw ValidationError(arc_label(i) + ": tail " + std::to_string(t) + " out of range");
  }
  if (std::isnan(arc.length)) throw ValidationError(arc_label(i) + ": length is NaN");
  if (arc.length < 0) throw ValidationError(arc_label(i) + ": negative length");
  if (std::isinf(arc.length)) throw ValidationError(arc_label(i) + ": infinite length");
}

// Counting-sort style CSR construction.
template <class EachVertex>
void build_csr(std::size_t n, std::size_t m, EachVertex&& each, std::vector<std::size_t>& offsets,
               std::vector<ArcIndex>& data) {
  offsets.assign(n + 1, 0);
  for (ArcIndex i = 1; i <= m; ++i) each(i, [&](VertexId v) { ++offsets[v + 1]; });
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  data.assign(offsets[n], kNoArc);
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (ArcIndex i = 1; i <= m; ++i) each(i, [&](VertexId v) { data[fill[v]++] = i; });
}

}  // namespace

Hypergraph Hypergraph::build(std::vector<std::string> names, std::vector<ArcSpec> specs) {
  std::vector<Hyperarc> arcs;
  arcs.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    auto& spec = specs[i];
    Hyperarc arc;
    arc.head = spec.head;
    arc.length = spec.length;
    for (const Tail& t : spec.tails) {
      if (t.multiplicity == 0) throw ValidationError(arc_label(i + 1) + ": zero multiplicity");
      arc.tails.insert(arc.tails.end(), t.multiplicity, t.vertex);
    }
    arcs.push_back(std::move(arc));
  }
  return from_arcs(std::move(names), std::move(arcs));
}

Hypergraph Hypergraph::build(std::size_t num_vertices, std::vector<ArcSpec> arcs) {
  return build(std::vector<std::string>(num_vertices), std::move(arcs));
}

Hypergraph Hypergraph::from_arcs(std::vector<std::string> names, std::vector<Hyperarc> arcs) {
  Hypergraph g;
  g.names_ = std::move(names);
  for (VertexId v = 0; v < g.names_.size(); ++v) {
    if (g.names_[v].empty()) g.names_[v] = "v" + std::to_string(v);
    check_name(g.names_[v], v);
    if (!g.by_name_.emplace(g.names_[v], v).second) {
      throw ValidationError("vertex " + std::to_string(v) + ": duplicate name '" + g.names_[v] + "'");
    }
  }
  if (g.names_.size() >= kNoVertex) throw ValidationError("too many vertices");
  for (std::size_t i = 0; i < arcs.size(); ++i) check_arc(arcs[i], i + 1, g.names_.size());
  g.arcs_ = std::move(arcs);
  g.index();
  return g;
}

void Hypergraph::index() {
  const std::size_t n = names_.size();
  const std::size_t m = arcs_.size();

  distinct_offsets_.assign(m + 1, 0);
  distinct_.clear();
  // Position of v in the current arc's distinct list; stamped by arc index.
  std::vector<std::size_t> slot(n, 0);
  std::vector<ArcIndex> stamp(n, kNoArc);
  for (ArcIndex i = 1; i <= m; ++i) {
    for (VertexId t : arcs_[i - 1].tails) {
      if (stamp[t] == i) {
        ++distinct_[slot[t]].multiplicity;
      } else {
        stamp[t] = i;
        slot[t] = distinct_.size();
        distinct_.push_back({t, 1});
      }
    }
    distinct_offsets_[i] = distinct_.size();
  }

  build_csr(
      n, m,
      [&](ArcIndex i, auto&& visit) {
        for (const Tail& t : distinct_tails(i)) visit(t.vertex);
      },
      forward_offsets_, forward_);
  forward_mult_.assign(forward_.size(), 0);
  {
    std::vector<std::size_t> fill(forward_offsets_.begin(), forward_offsets_.end() - 1);
    for (ArcIndex i = 1; i <= m; ++i) {
      for (const Tail& t : distinct_tails(i)) forward_mult_[fill[t.vertex]++] = t.multiplicity;
    }
  }
  build_csr(
      n, m, [&](ArcIndex i, auto&& visit) { visit(arcs_[i - 1].head); }, backward_offsets_,
      backward_);
}

std::size_t Hypergraph::total_size() const noexcept {
  std::size_t t = names_.size();
  for (const auto& a : arcs_) t += 1 + a.tails.size();
  return t;
}

std::optional<VertexId> Hypergraph::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

void Hypergraph::validate() const {
  const std::size_t n = names_.size();
  std::unordered_set<std::string> seen;
  for (VertexId v = 0; v < n; ++v) {
    check_name(names_[v], v);
    if (!seen.insert(names_[v]).second) {
      throw ValidationError("vertex " + std::to_string(v) + ": duplicate name '" + names_[v] + "'");
    }
  }
  for (std::size_t i = 0; i < arcs_.size(); ++i) check_arc(arcs_[i], i + 1, n);

  Hypergraph fresh;
  fresh.names_ = names_;
  fresh.arcs_ = arcs_;
  fresh.index();
  if (fresh.distinct_offsets_ != distinct_offsets_ || fresh.distinct_ != distinct_) {
    throw ValidationError("distinct tail index disagrees with arcs");
  }
  if (fresh.forward_offsets_ != forward_offsets_ || fresh.forward_ != forward_ ||
      fresh.forward_mult_ != forward_mult_) {
    throw ValidationError("forward adjacency disagrees with arcs");
  }
  if (fresh.backward_offsets_ != backward_offsets_ || fresh.backward_ != backward_) {
    throw ValidationError("backward adjacency disagrees with arcs");
  }
  for (VertexId v = 0; v < n; ++v) {
    auto it = by_name_.find(names_[v]);
    if (it == by_name_.end() || it->second != v) {
      throw ValidationError("name table disagrees at vertex " + std::to_string(v));
    }
  }
}

std::vector<VertexId> Query::source_vertices() const {
  std::vector<VertexId> out;
  out.reserve(sources.size());
  for (const auto& s : sources) out.push_back(s.vertex);
  return out;
}

void Query::validate(const Hypergraph& g) const {
  if (sources.empty()) throw ValidationError("query has no sources");
  std::unordered_set<VertexId> seen;
  for (const auto& s : sources) {
    if (s.vertex >= g.num_vertices()) throw ValidationError("source vertex out of range");
    if (!seen.insert(s.vertex).second) {
      throw ValidationError("duplicate source '" + g.name(s.vertex) + "'");
    }
    if (!(s.initial_cost >= 0) || std::isinf(s.initial_cost)) {
      throw ValidationError("source '" + g.name(s.vertex) +
                            "': initial cost must be finite and nonnegative");
    }
  }
  if (target >= g.num_vertices()) throw ValidationError("target vertex out of range");
}

std::optional<Query> Restriction::map_query(const Query& q) const {
  if (q.target >= vertex_to_new.size() || vertex_to_new[q.target] == kNoVertex) return std::nullopt;
  Query out;
  out.target = vertex_to_new[q.target];
  for (const auto& s : q.sources) {
    if (s.vertex < vertex_to_new.size() && vertex_to_new[s.vertex] != kNoVertex) {
      out.sources.push_back({vertex_to_new[s.vertex], s.initial_cost});
    }
  }
  return out;
}

Restriction restrict_to(const Hypergraph& g, const VertexMask& keep) {
  return restrict_to(g, keep, std::vector<bool>(g.num_arcs() + 1, true));
}

Restriction restrict_to(const Hypergraph& g, const VertexMask& keep,
                        const std::vector<bool>& keep_arc) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_arcs();
  if (keep.size() != n) throw ValidationError("restriction mask size differs from vertex count");
  if (keep_arc.size() != m + 1) throw ValidationError("arc mask size differs from arc count");

  Restriction r;
  r.vertex_to_new.assign(n, kNoVertex);
  std::vector<std::string> names;
  for (VertexId v = 0; v < n; ++v) {
    if (!keep[v]) continue;
    r.vertex_to_new[v] = static_cast<VertexId>(r.vertex_to_old.size());
    r.vertex_to_old.push_back(v);
    names.push_back(g.name(v));
  }

  r.arc_to_new.assign(m + 1, kNoArc);
  r.arc_to_old.assign(1, kNoArc);
  std::vector<Hyperarc> arcs;
  for (ArcIndex i = 1; i <= m; ++i) {
    if (!keep_arc[i]) continue;
    const Hyperarc& a = g.arc(i);
    if (!keep[a.head]) continue;
    if (!std::all_of(a.tails.begin(), a.tails.end(), [&](VertexId t) { return keep[t]; })) continue;
    Hyperarc b;
    b.head = r.vertex_to_new[a.head];
    b.length = a.length;
    b.tails.reserve(a.tails.size());
    for (VertexId t : a.tails) b.tails.push_back(r.vertex_to_new[t]);
    arcs.push_back(std::move(b));
    r.arc_to_new[i] = static_cast<ArcIndex>(r.arc_to_old.size());
    r.arc_to_old.push_back(i);
  }
  r.graph = Hypergraph::from_arcs(std::move(names), std::move(arcs));
  return r;
}

Restriction compose(const Restriction& first, const Restriction& second) {
  Restriction r;
  r.graph = second.graph;
  r.vertex_to_new.assign(first.vertex_to_new.size(), kNoVertex);
  for (std::size_t v = 0; v < first.vertex_to_new.size(); ++v) {
    VertexId mid = first.vertex_to_new[v];
    if (mid != kNoVertex) r.vertex_to_new[v] = second.vertex_to_new[mid];
  }
  r.vertex_to_old.reserve(second.vertex_to_old.size());
  for (VertexId mid : second.vertex_to_old) r.vertex_to_old.push_back(first.vertex_to_old[mid]);

  r.arc_to_new.assign(first.arc_to_new.size(), kNoArc);
  for (std::size_t i = 1; i < first.arc_to_new.size(); ++i) {
    ArcIndex mid = first.arc_to_new[i];
    if (mid != kNoArc) r.arc_to_new[i] = second.arc_to_new[mid];
  }
  r.arc_to_old.assign(1, kNoArc);
  for (std::size_t i = 1; i < second.arc_to_old.size(); ++i) {
    r.arc_to_old.push_back(first.arc_to_old[second.arc_to_old[i]]);
  }
  return r;
}

}  // namespace hyperpath
