#pragma once

// Ordered multi-hypergraphs: one head per arc, an ordered sequence of tail
// occurrences, and a nonnegative length. Arc costs are additive:
//
//   cost(e) = length(e) + sum over tail occurrences t of cost(t)
//
// which is the same thing as length + sum over distinct tails of
// multiplicity * cost(tail).

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hyperpath {

using Cost = double;
using VertexId = std::uint32_t;
// Arc indices are 1-based. Index 0 is the "no arc" sentinel used by
// predecessor (pi) and parent (psi) tables.
using ArcIndex = std::uint32_t;

inline constexpr Cost kInfinity = std::numeric_limits<Cost>::infinity();
inline constexpr ArcIndex kNoArc = 0;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Per-vertex boolean table (reachability, keep flags).
using VertexMask = std::vector<bool>;

struct Tail {
  VertexId vertex = 0;
  std::uint32_t multiplicity = 1;

  friend bool operator==(const Tail&, const Tail&) = default;
};

// Input form of an arc. Each entry contributes `multiplicity` consecutive
// occurrences to the ordered tail sequence.
struct ArcSpec {
  VertexId head = 0;
  std::vector<Tail> tails;
  Cost length = 0;
};

struct Hyperarc {
  VertexId head = 0;
  std::vector<VertexId> tails;  // ordered occurrences
  Cost length = 0;

  friend bool operator==(const Hyperarc&, const Hyperarc&) = default;
};

class Hypergraph {
 public:
  Hypergraph() = default;

  // Validates and indexes. `names` fixes the vertex count; an empty name is
  // replaced by "v<id>". Throws ValidationError naming the offending
  // arc or vertex.
  static Hypergraph build(std::vector<std::string> names, std::vector<ArcSpec> arcs);
  static Hypergraph build(std::size_t num_vertices, std::vector<ArcSpec> arcs);

  // Same as build() but takes tails already expanded to occurrences.
  static Hypergraph from_arcs(std::vector<std::string> names, std::vector<Hyperarc> arcs);

  std::size_t num_vertices() const noexcept { return names_.size(); }
  std::size_t num_arcs() const noexcept { return arcs_.size(); }

  // Total input size: vertices plus, per arc, the head and every tail occurrence.
  std::size_t total_size() const noexcept;

  // 1 <= i <= num_arcs().
  const Hyperarc& arc(ArcIndex i) const { return arcs_[i - 1]; }

  // Distinct tail vertices of arc i with their occurrence counts, in order of
  // first occurrence.
  std::span<const Tail> distinct_tails(ArcIndex i) const {
    return {distinct_.data() + distinct_offsets_[i - 1],
            distinct_.data() + distinct_offsets_[i]};
  }

  // Arcs having v among their tails, each listed once, ascending.
  std::span<const ArcIndex> arcs_with_tail(VertexId v) const {
    return {forward_.data() + forward_offsets_[v], forward_.data() + forward_offsets_[v + 1]};
  }

  // Multiplicity of v in each arc of arcs_with_tail(v), position for position.
  std::span<const std::uint32_t> tail_multiplicities(VertexId v) const {
    return {forward_mult_.data() + forward_offsets_[v],
            forward_mult_.data() + forward_offsets_[v + 1]};
  }

  // Arcs whose head is v, ascending.
  std::span<const ArcIndex> arcs_with_head(VertexId v) const {
    return {backward_.data() + backward_offsets_[v],
            backward_.data() + backward_offsets_[v + 1]};
  }

  const std::string& name(VertexId v) const { return names_[v]; }
  std::span<const std::string> names() const noexcept { return names_; }
  std::optional<VertexId> find(std::string_view name) const;

  // Re-derives every index from the arc list and checks it against the stored
  // one, plus the arc invariants. Throws ValidationError.
  void validate() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.names_ == b.names_ && a.arcs_ == b.arcs_;
  }

 private:
  void index();

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> by_name_;
  std::vector<Hyperarc> arcs_;

  std::vector<std::size_t> distinct_offsets_;
  std::vector<Tail> distinct_;
  std::vector<std::size_t> forward_offsets_;
  std::vector<ArcIndex> forward_;
  std::vector<std::uint32_t> forward_mult_;
  std::vector<std::size_t> backward_offsets_;
  std::vector<ArcIndex> backward_;
};

struct Source {
  VertexId vertex = 0;
  Cost initial_cost = 0;

  friend bool operator==(const Source&, const Source&) = default;
};

struct Query {
  std::vector<Source> sources;
  VertexId target = 0;

  std::vector<VertexId> source_vertices() const;

  // Sources nonempty and distinct, costs finite and >= 0, all ids in range.
  void validate(const Hypergraph& g) const;
};

// G<V'>: the vertices in V' and the arcs whose head and tails all lie in V',
// renumbered densely with relative order preserved.
struct Restriction {
  Hypergraph graph;
  std::vector<VertexId> vertex_to_new;  // old id -> new id, kNoVertex if dropped
  std::vector<VertexId> vertex_to_old;  // new id -> old id
  std::vector<ArcIndex> arc_to_new;     // old index -> new index, kNoArc if dropped; [0] unused
  std::vector<ArcIndex> arc_to_old;     // new index -> old index; [0] unused

  // Maps sources/target into the restricted numbering, dropping sources that
  // did not survive. Returns nullopt when the target did not survive.
  std::optional<Query> map_query(const Query& q) const;
};

Restriction restrict_to(const Hypergraph& g, const VertexMask& keep);

// Restriction to `keep`, additionally dropping arcs with keep_arc[i] false
// (keep_arc is indexed by arc index, [0] unused).
Restriction restrict_to(const Hypergraph& g, const VertexMask& keep,
                        const std::vector<bool>& keep_arc);

// first: G -> G1, second: G1 -> G2. Result: G -> G2.
Restriction compose(const Restriction& first, const Restriction& second);

}  // namespace hyperpath
