#include "hyperpath/text_format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "hyperpath/errors.hpp"

namespace hyperpath {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

class DocumentBuilder {
 public:
  explicit DocumentBuilder(std::string source) : source_(std::move(source)) {}

  void line(std::string_view text, std::size_t lineno) {
    lineno_ = lineno;
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    auto tok = split_ws(text);
    if (tok.empty()) return;
    const std::string_view kw = tok[0];
    if (kw == "vertex") {
      expect(tok.size() == 2, "expected 'vertex <name>'");
      if (ids_.count(std::string(tok[1]))) fail("vertex '" + std::string(tok[1]) + "' already declared");
      vertex(tok[1]);
    } else if (kw == "arc") {
      arc(tok);
    } else if (kw == "source") {
      expect(tok.size() == 2 || tok.size() == 3, "expected 'source <name> [<initialCost>]'");
      Cost c = 0;
      if (tok.size() == 3) c = number(tok[2]);
      if (!(c >= 0) || std::isinf(c)) fail("source cost must be finite and nonnegative");
      VertexId v = vertex(tok[1]);
      for (const auto& s : sources_) {
        if (s.vertex == v) fail("duplicate source '" + std::string(tok[1]) + "'");
      }
      sources_.push_back({v, c});
    } else if (kw == "target") {
      expect(tok.size() == 2, "expected 'target <name>'");
      if (target_) fail("target given twice");
      target_ = vertex(tok[1]);
    } else {
      fail("unknown directive '" + std::string(kw) + "'");
    }
  }

  Document finish() {
    Document doc;
    try {
      doc.graph = Hypergraph::build(std::move(names_), std::move(arcs_));
    } catch (const ValidationError& e) {
      throw ParseError(source_, arc_lines_.empty() ? 0 : locate(e.what()), e.what());
    }
    doc.sources = std::move(sources_);
    doc.target = target_;
    return doc;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(source_, lineno_, msg); }
  void expect(bool ok, const char* msg) const {
    if (!ok) fail(msg);
  }

  // Maps "arc <i>: ..." validation messages back to the line that declared arc i.
  std::size_t locate(const std::string& what) const {
    if (what.rfind("arc ", 0) == 0) {
      std::size_t i = 0;
      auto res = std::from_chars(what.data() + 4, what.data() + what.size(), i);
      if (res.ec == std::errc() && i >= 1 && i <= arc_lines_.size()) return arc_lines_[i - 1];
    }
    return lineno_;
  }

  VertexId vertex(std::string_view name) {
    std::string key(name);
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    if (key.find('*') != std::string::npos) fail("vertex name '" + key + "' contains '*'");
    if (key == "<-" || key == "@") fail("'" + key + "' is not a vertex name");
    auto id = static_cast<VertexId>(names_.size());
    ids_.emplace(key, id);
    names_.push_back(std::move(key));
    return id;
  }

  Cost number(std::string_view s) const {
    auto c = parse_cost(s);
    if (!c) fail("bad number '" + std::string(s) + "'");
    return *c;
  }

  void arc(const std::vector<std::string_view>& tok) {
    // arc HEAD <- T1 ... Tk @ LEN
    expect(tok.size() >= 6, "expected 'arc <head> <- <tails...> @ <length>'");
    expect(tok[2] == "<-", "expected '<-' after arc head");
    expect(tok[tok.size() - 2] == "@", "expected '@ <length>' at end of arc");
    ArcSpec spec;
    spec.head = vertex(tok[1]);
    for (std::size_t k = 3; k + 2 < tok.size(); ++k) {
      std::string_view t = tok[k];
      std::uint32_t mult = 1;
      if (auto star = t.rfind('*'); star != std::string_view::npos) {
        std::string_view m = t.substr(star + 1);
        auto res = std::from_chars(m.data(), m.data() + m.size(), mult);
        if (res.ec != std::errc() || res.ptr != m.data() + m.size()) {
          fail("bad multiplicity in '" + std::string(t) + "'");
        }
        if (mult == 0) fail("zero multiplicity in '" + std::string(t) + "'");
        t = t.substr(0, star);
      }
      expect(!t.empty(), "empty tail name");
      spec.tails.push_back({vertex(t), mult});
    }
    spec.length = number(tok.back());
    if (spec.length < 0) fail("negative length");
    if (std::isinf(spec.length)) fail("infinite length");
    arcs_.push_back(std::move(spec));
    arc_lines_.push_back(lineno_);
  }

  std::string source_;
  std::size_t lineno_ = 0;
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<ArcSpec> arcs_;
  std::vector<std::size_t> arc_lines_;
  std::vector<Source> sources_;
  std::optional<VertexId> target_;
};

}  // namespace

Query Document::query() const {
  if (sources.empty()) throw ValidationError("no 'source' line");
  if (!target) throw ValidationError("no 'target' line");
  Query q{sources, *target};
  q.validate(graph);
  return q;
}

Document parse_document(std::istream& in, const std::string& source_name) {
  DocumentBuilder b(source_name);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) b.line(line, ++lineno);
  return b.finish();
}

Document parse_document_string(std::string_view text, const std::string& source_name) {
  std::istringstream in{std::string(text)};
  return parse_document(in, source_name);
}

Document read_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_document(in, path);
}

std::string format_cost(Cost c) {
  if (std::isinf(c)) return c > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", c);
  return buf;
}

std::optional<Cost> parse_cost(std::string_view s) {
  if (s == "inf" || s == "infinity" || s == "+inf") return kInfinity;
  if (s.empty()) return std::nullopt;
  std::string copy(s);
  char* end = nullptr;
  double v = std::strtod(copy.c_str(), &end);
  if (end != copy.c_str() + copy.size() || std::isnan(v)) return std::nullopt;
  return v;
}

void write_document(std::ostream& out, const Hypergraph& g, std::span<const Source> sources,
                    std::optional<VertexId> target) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) out << "vertex " << g.name(v) << '\n';
  for (ArcIndex i = 1; i <= g.num_arcs(); ++i) {
    const Hyperarc& a = g.arc(i);
    out << "arc " << g.name(a.head) << " <-";
    for (std::size_t k = 0; k < a.tails.size();) {
      std::size_t run = 1;
      while (k + run < a.tails.size() && a.tails[k + run] == a.tails[k]) ++run;
      out << ' ' << g.name(a.tails[k]);
      if (run > 1) out << '*' << run;
      k += run;
    }
    out << " @ " << format_cost(a.length) << '\n';
  }
  for (const auto& s : sources) {
    out << "source " << g.name(s.vertex) << ' ' << format_cost(s.initial_cost) << '\n';
  }
  if (target) out << "target " << g.name(*target) << '\n';
}

std::string to_text(const Hypergraph& g, std::span<const Source> sources,
                    std::optional<VertexId> target) {
  std::ostringstream out;
  write_document(out, g, sources, target);
  return out.str();
}

}  // namespace hyperpath
