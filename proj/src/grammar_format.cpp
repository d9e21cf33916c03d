#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hyperpath/errors.hpp"
#include "hyperpath/grammar.hpp"
#include "hyperpath/text_format.hpp"

namespace hyperpath {

namespace {

bool is_delim(char c) {
  return c == '(' || c == ')' || c == ',' || c == ' ' || c == '\t' || c == '\r';
}

// Recursive-descent reader for one production's right-hand side.
class RhsReader {
 public:
  RhsReader(std::string_view text, const std::string& source, std::size_t line)
      : text_(text), source_(source), line_(line) {}

  std::vector<TreeNode> items() {
    std::vector<TreeNode> out;
    skip_ws();
    while (pos_ < text_.size()) {
      out.push_back(item());
      skip_ws();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(source_, line_, msg + " at column " + std::to_string(pos_ + 1) + " of rhs");
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_delim(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a symbol");
    return std::string(text_.substr(start, pos_ - start));
  }

  TreeNode item() {
    TreeNode node{ident(), {}};
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        return node;
      }
      while (true) {
        node.children.push_back(item());
        skip_ws();
        if (pos_ >= text_.size()) fail("unclosed '('");
        if (text_[pos_] == ',') {
          ++pos_;
          skip_ws();
          continue;
        }
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
    }
    return node;
  }

  std::string_view text_;
  const std::string& source_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Wrtg parse_grammar(std::istream& in, const std::string& source_name) {
  std::vector<Production> productions;
  std::vector<std::size_t> lines;
  std::optional<std::string> start;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.rfind("start", 0) == 0 && (line.size() == 5 || line[5] == ' ' || line[5] == '\t')) {
      std::string_view name = trim(line.substr(5));
      if (name.empty() || name.find_first_of(" \t(),") != std::string_view::npos) {
        throw ParseError(source_name, lineno, "expected 'start <nonterminal>'");
      }
      if (start) throw ParseError(source_name, lineno, "start given twice");
      start = std::string(name);
      continue;
    }

    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(source_name, lineno, "expected '<weight>: <lhs> -> <rhs>'");
    }
    auto weight = parse_cost(trim(line.substr(0, colon)));
    if (!weight) throw ParseError(source_name, lineno, "bad weight");
    if (!(*weight > 0) || std::isinf(*weight)) {
      throw ParseError(source_name, lineno, "weight must be positive and finite");
    }
    std::string_view rest = line.substr(colon + 1);
    auto arrow = rest.find("->");
    if (arrow == std::string_view::npos) throw ParseError(source_name, lineno, "missing '->'");
    std::string_view lhs = trim(rest.substr(0, arrow));
    if (lhs.empty() || lhs.find_first_of(" \t(),") != std::string_view::npos) {
      throw ParseError(source_name, lineno, "lhs must be a single nonterminal");
    }
    Production p;
    p.index = productions.size() + 1;
    p.lhs = std::string(lhs);
    p.weight = *weight;
    p.rhs = RhsReader(rest.substr(arrow + 2), source_name, lineno).items();
    productions.push_back(std::move(p));
    lines.push_back(lineno);
  }
  if (productions.empty()) throw ParseError(source_name, lineno, "grammar has no productions");
  std::string start_symbol = start.value_or(productions.front().lhs);
  try {
    return Wrtg(std::move(start_symbol), std::move(productions));
  } catch (const ValidationError& e) {
    throw ParseError(source_name, 0, e.what());
  }
}

Wrtg parse_grammar_string(std::string_view text, const std::string& source_name) {
  std::istringstream in{std::string(text)};
  return parse_grammar(in, source_name);
}

Wrtg read_grammar_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_grammar(in, path);
}

void write_grammar(std::ostream& out, const Wrtg& g) {
  out << "start " << g.start() << '\n';
  for (const auto& p : g.productions()) {
    out << format_cost(p.weight) << ": " << p.lhs << " ->";
    if (!p.rhs.empty()) out << ' ' << format_rhs(p.rhs);
    out << '\n';
  }
}

std::string grammar_to_text(const Wrtg& g) {
  std::ostringstream out;
  write_grammar(out, g);
  return out.str();
}

}  // namespace hyperpath
