#pragma once

// Line-based hypergraph text format:
//
//   # comment
//   vertex <name>
//   arc <head> <- <tail>[*<mult>] [<tail>[*<mult>] ...] @ <length>
//   source <name> [<initialCost>]
//   target <name>
//
// Vertices are declared by `vertex` lines or by first use, in order of
// appearance. Costs are written with 17 significant digits so that
// write -> parse -> write is byte-identical.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

struct Document {
  Hypergraph graph;
  std::vector<Source> sources;
  std::optional<VertexId> target;

  // Throws ValidationError if sources or target are missing.
  Query query() const;
};

// `source_name` only labels error messages. Throws ParseError with the line number.
Document parse_document(std::istream& in, const std::string& source_name = "<input>");
Document parse_document_string(std::string_view text, const std::string& source_name = "<input>");
Document read_document_file(const std::string& path);

void write_document(std::ostream& out, const Hypergraph& g, std::span<const Source> sources = {},
                    std::optional<VertexId> target = std::nullopt);
std::string to_text(const Hypergraph& g, std::span<const Source> sources = {},
                    std::optional<VertexId> target = std::nullopt);

// "%.17g", with "inf" for +infinity.
std::string format_cost(Cost c);

// Accepts decimal numbers and "inf"/"infinity". Returns nullopt on garbage or NaN.
std::optional<Cost> parse_cost(std::string_view s);

}  // namespace hyperpath
