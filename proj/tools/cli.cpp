#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "hyperpath/errors.hpp"
#include "hyperpath/grammar.hpp"
#include "hyperpath/inside.hpp"
#include "hyperpath/outside.hpp"
#include "hyperpath/pipeline.hpp"
#include "hyperpath/reachability.hpp"
#include "hyperpath/text_format.hpp"

namespace hyperpath::cli {

namespace {

using nlohmann::json;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

Document load_document(const std::string& path, Streams& s) {
  if (path == "-") return parse_document(s.in, "<stdin>");
  return read_document_file(path);
}

Wrtg load_grammar(const std::string& path, Streams& s) {
  if (path == "-") return parse_grammar(s.in, "<stdin>");
  return read_grammar_file(path);
}

// Writes through `write` to `path`, or to stdout when path is empty or "-".
template <class Write>
void emit(const std::string& path, Streams& s, Write&& write) {
  if (path.empty() || path == "-") {
    write(s.out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParseError(path, 0, "cannot open for writing");
  write(f);
}

json cost_json(Cost c) { return std::isinf(c) ? json(nullptr) : json(c); }

Cost parse_beam(const std::string& text) {
  auto beam = parse_cost(text);
  if (!beam || *beam < 0) throw PreconditionError("beam must be a nonnegative number or 'inf'");
  return *beam;
}

std::vector<std::string> tail_names(const Hypergraph& g, ArcIndex i) {
  std::vector<std::string> out;
  for (VertexId t : g.arc(i).tails) out.push_back(g.name(t));
  return out;
}

void write_report(std::ostream& os, const std::string& format, const PipelineResult& r,
                  const Hypergraph& original) {
  const Hypergraph& g = r.reduction.restriction.graph;
  const auto& old_arc = r.reduction.restriction.arc_to_old;
  if (format == "json") {
    json doc;
    doc["vertices"] = json::array();
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      doc["vertices"].push_back({{"name", g.name(v)},
                                 {"inside", cost_json(r.inside.inside[v])},
                                 {"outside", cost_json(r.outside.outside[v])},
                                 {"gamma", cost_json(r.prune.gamma.vertex[v])},
                                 {"keep", bool(r.prune.keep_vertex[v])}});
    }
    doc["arcs"] = json::array();
    for (ArcIndex i = 1; i <= g.num_arcs(); ++i) {
      doc["arcs"].push_back({{"index", old_arc[i]},
                             {"head", g.name(g.arc(i).head)},
                             {"tails", tail_names(g, i)},
                             {"length", g.arc(i).length},
                             {"gamma", cost_json(r.prune.gamma.arc[i])},
                             {"keep", bool(r.prune.keep_arc[i])}});
    }
    doc["best"] = cost_json(r.best());
    os << doc.dump(2) << '\n';
    return;
  }
  (void)original;
  os << "# best " << format_cost(r.best()) << " threshold " << format_cost(r.prune.threshold)
     << '\n';
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    os << "vertex " << g.name(v) << ' ' << format_cost(r.inside.inside[v]) << ' '
       << format_cost(r.outside.outside[v]) << ' ' << format_cost(r.prune.gamma.vertex[v]) << ' '
       << (r.prune.keep_vertex[v] ? "keep" : "prune") << '\n';
  }
  for (ArcIndex i = 1; i <= g.num_arcs(); ++i) {
    os << "arc " << old_arc[i] << ' ' << format_cost(r.prune.gamma.arc[i]) << ' '
       << (r.prune.keep_arc[i] ? "keep" : "prune") << '\n';
  }
}

std::vector<Source> mapped_sources(const Query& q) { return q.sources; }

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams s{in, out, err};
  CLI::App app{"Hypergraph reachability, shortest hyperpath-trees and beam pruning"};
  app.name("hyperpath");
  app.require_subcommand(1);

  std::string file;
  std::string output;
  std::string vertex;
  std::string beam_text;
  std::string report = "text";
  std::string report_file;
  std::string map_file;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Input file, or - for standard input")->required();
  };

  auto* validate = app.add_subcommand("validate", "Parse and validate a hypergraph");
  add_file(validate);
  auto* reach_from_cmd = app.add_subcommand("reach-from", "Vertices reachable from the sources");
  add_file(reach_from_cmd);
  auto* reach_to_cmd = app.add_subcommand("reach-to", "Vertices that can help reach the target");
  add_file(reach_to_cmd);
  auto* reduce_cmd = app.add_subcommand("reduce", "Keep only vertices/arcs on some hyperpath-tree");
  add_file(reduce_cmd);
  reduce_cmd->add_option("-o,--output", output, "Write the reduced hypergraph here");
  auto* inside_cmd = app.add_subcommand("inside", "Viterbi inside costs and predecessor arcs");
  add_file(inside_cmd);
  auto* best_cmd = app.add_subcommand("best-tree", "Cheapest hyperpath-tree to a vertex");
  add_file(best_cmd);
  best_cmd->add_option("--vertex", vertex, "Vertex name (default: the target)");
  auto* outside_cmd = app.add_subcommand("outside", "Viterbi outside costs and parent arcs");
  add_file(outside_cmd);
  auto* prune_cmd = app.add_subcommand("prune", "Drop vertices/arcs outside the beam");
  add_file(prune_cmd);
  prune_cmd->add_option("--beam", beam_text, "Beam width (cost), or inf")->required();
  prune_cmd->add_option("-o,--output", output, "Write the pruned hypergraph here");
  prune_cmd->add_option("--report", report, "Report format")->check(CLI::IsMember({"text", "json"}));
  prune_cmd->add_option("--report-file", report_file, "Write the report here instead of stderr");
  auto* from_grammar_cmd = app.add_subcommand("from-grammar", "Convert a grammar to a hypergraph");
  add_file(from_grammar_cmd);
  from_grammar_cmd->add_option("-o,--output", output, "Write the hypergraph here");
  from_grammar_cmd->add_option("--map", map_file, "Arc/production map (default: <output>.map)");
  auto* prune_grammar_cmd = app.add_subcommand("prune-grammar", "Beam-prune a grammar");
  add_file(prune_grammar_cmd);
  prune_grammar_cmd->add_option("--beam", beam_text, "Beam width (cost), or inf")->required();
  prune_grammar_cmd->add_option("-o,--output", output, "Write the pruned grammar here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hyperpath: " << e.what() << '\n';
    return kUsageOrParse;
  }

  try {
    if (validate->parsed()) {
      Document doc = load_document(file, s);
      doc.graph.validate();
      if (!doc.sources.empty() && doc.target) doc.query();
      return kOk;
    }

    if (reach_from_cmd->parsed()) {
      Document doc = load_document(file, s);
      if (doc.sources.empty()) throw ValidationError("no 'source' line");
      std::vector<VertexId> xs;
      for (const auto& src : doc.sources) xs.push_back(src.vertex);
      auto reached = reach_from(doc.graph, xs);
      for (VertexId v = 0; v < doc.graph.num_vertices(); ++v) {
        if (reached[v]) out << doc.graph.name(v) << '\n';
      }
      return kOk;
    }

    if (reach_to_cmd->parsed()) {
      Document doc = load_document(file, s);
      if (!doc.target) throw ValidationError("no 'target' line");
      auto used = reach_to(doc.graph, *doc.target);
      for (VertexId v = 0; v < doc.graph.num_vertices(); ++v) {
        if (used[v]) out << doc.graph.name(v) << '\n';
      }
      return kOk;
    }

    if (reduce_cmd->parsed()) {
      Document doc = load_document(file, s);
      Reduction r = reduce(doc.graph, doc.query());
      if (!r.target_reachable) {
        err << "hyperpath: target unreachable\n";
        return kUnreachable;
      }
      const Hypergraph& g = r.restriction.graph;
      for (VertexId v = 0; v < g.num_vertices(); ++v) out << g.name(v) << '\n';
      if (!output.empty()) {
        emit(output, s, [&](std::ostream& os) {
          write_document(os, g, mapped_sources(r.query), r.query.target);
        });
      }
      return kOk;
    }

    if (inside_cmd->parsed() || best_cmd->parsed()) {
      Document doc = load_document(file, s);
      if (doc.sources.empty()) throw ValidationError("no 'source' line");
      const Hypergraph& g = doc.graph;
      InsideResult r = viterbi_inside(g, std::span<const Source>(doc.sources));
      if (inside_cmd->parsed()) {
        if (doc.target && !(r.inside[*doc.target] < kInfinity)) {
          err << "hyperpath: target unreachable\n";
          return kUnreachable;
        }
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
          out << g.name(v) << ' ' << format_cost(r.inside[v]) << ' ' << r.pi[v] << '\n';
        }
        return kOk;
      }
      VertexId v;
      if (!vertex.empty()) {
        auto found = g.find(vertex);
        if (!found) throw ValidationError("unknown vertex '" + vertex + "'");
        v = *found;
      } else if (doc.target) {
        v = *doc.target;
      } else {
        throw ValidationError("no --vertex and no 'target' line");
      }
      if (!(r.inside[v] < kInfinity)) {
        err << "hyperpath: '" << g.name(v) << "' unreachable\n";
        return kUnreachable;
      }
      HyperpathTree tree = extract_best_tree(g, r, v);
      out << format_tree(g, tree) << '\n' << format_cost(r.inside[v]) << '\n';
      return kOk;
    }

    if (outside_cmd->parsed()) {
      Document doc = load_document(file, s);
      Query q = doc.query();
      const Hypergraph& g = doc.graph;
      InsideResult in_r = viterbi_inside(g, q);
      if (!(in_r.inside[q.target] < kInfinity)) {
        err << "hyperpath: target unreachable\n";
        return kUnreachable;
      }
      OutsideResult r = viterbi_outside(g, in_r, q.target);
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        out << g.name(v) << ' ' << format_cost(r.outside[v]) << ' ' << r.psi[v] << '\n';
      }
      return kOk;
    }

    if (prune_cmd->parsed()) {
      const Cost beam = parse_beam(beam_text);
      Document doc = load_document(file, s);
      Query q = doc.query();
      if (!reduce(doc.graph, q).target_reachable) {
        err << "hyperpath: target unreachable\n";
        return kUnreachable;
      }
      PipelineResult r = run_pipeline(doc.graph, q, beam);
      if (report_file.empty()) {
        write_report(err, report, r, doc.graph);
      } else {
        std::ofstream f(report_file);
        if (!f) throw ParseError(report_file, 0, "cannot open for writing");
        write_report(f, report, r, doc.graph);
      }
      emit(output, s, [&](std::ostream& os) {
        write_document(os, r.pruned.graph, mapped_sources(r.pruned_query), r.pruned_query.target);
      });
      return kOk;
    }

    if (from_grammar_cmd->parsed()) {
      Wrtg grammar = load_grammar(file, s);
      GrammarHypergraph hg = to_hypergraph(grammar);
      emit(output, s, [&](std::ostream& os) {
        write_document(os, hg.graph, hg.query.sources, hg.query.target);
      });
      std::string map_path = map_file;
      if (map_path.empty() && !output.empty() && output != "-") map_path = output + ".map";
      if (!map_path.empty()) {
        emit(map_path, s, [&](std::ostream& os) {
          for (ArcIndex i = 1; i <= hg.graph.num_arcs(); ++i) {
            os << i << ' ' << hg.map.arc_to_production[i] << '\n';
          }
        });
      }
      return kOk;
    }

    if (prune_grammar_cmd->parsed()) {
      const Cost beam = parse_beam(beam_text);
      Wrtg grammar = load_grammar(file, s);
      GrammarHypergraph hg = to_hypergraph(grammar);
      if (!reduce(hg.graph, hg.query).target_reachable) {
        err << "hyperpath: language empty (start symbol derives no tree)\n";
        return kUnreachable;
      }
      PipelineResult r = run_pipeline(hg.graph, hg.query, beam);
      Wrtg pruned = from_pruned(grammar, hg.map, r.pruned);
      emit(output, s, [&](std::ostream& os) { write_grammar(os, pruned); });
      return kOk;
    }
  } catch (const UnreachableError& e) {
    err << "hyperpath: " << e.what() << '\n';
    return kUnreachable;
  } catch (const InternalError& e) {
    err << "hyperpath: internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "hyperpath: " << e.what() << '\n';
    return kUsageOrParse;
  } catch (const std::exception& e) {
    err << "hyperpath: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsageOrParse;
}

}  // namespace hyperpath::cli
