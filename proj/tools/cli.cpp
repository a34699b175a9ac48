#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "hdtkg/corpus.hpp"
#include "hdtkg/errors.hpp"
#include "hdtkg/query.hpp"
#include "hdtkg/rdf_io.hpp"
#include "hdtkg/reasoner.hpp"
#include "hdtkg/validator.hpp"

namespace hdtkg::cli {

namespace {

enum class Format { turtle, ntriples };

struct Failure {
  std::string message;
};

Format detect_format(const std::string& path, const std::string& forced) {
  if (forced == "turtle") return Format::turtle;
  if (forced == "ntriples") return Format::ntriples;
  if (path.size() >= 3 && path.ends_with(".nt")) return Format::ntriples;
  return Format::turtle;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Failure{"cannot read " + path};
  return buf.str();
}

Graph load(const std::string& path, Format format, std::ostream& err) {
  const std::string text = read_file(path);
  ParseResult r = format == Format::ntriples ? parse_ntriples(text) : parse_turtle(text);
  for (const ParseDiagnostic& d : r.diagnostics) err << path << ":" << to_string(d) << "\n";
  if (!r.ok()) throw Failure{"parse failed: " + path};
  return std::move(r.graph);
}

std::string serialize(const Graph& g, Format format) {
  return format == Format::ntriples ? serialize_ntriples(g) : serialize_turtle(g);
}

void emit(const std::string& data, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Failure{"cannot write " + path};
  file << data;
  file.flush();
  if (!file) throw Failure{"cannot write " + path};
}

InferenceConfig parse_rules(const std::string& list) {
  InferenceConfig cfg = InferenceConfig::none();
  if (list == "none" || list.empty()) return cfg;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (item == "R1") {
      cfg.materialize_supertypes = true;
    } else if (item == "R2") {
      cfg.materialize_superproperties = true;
    } else if (item == "R3") {
      cfg.infer_types_from_domain_range = true;
    } else if (item == "R4") {
      cfg.materialize_inverses = true;
    } else if (!item.empty()) {
      throw Failure{"unknown rule '" + item + "' (expected R1..R4 or none)"};
    }
  }
  return cfg;
}

std::string corpus_names() {
  std::string names;
  for (const CorpusEntry& e : corpus_entries()) {
    if (!names.empty()) names += ", ";
    names += e.name;
  }
  return names;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heritage Digital Twin knowledge graph tool", "hdtkg"};
  app.require_subcommand(1);

  std::string input, output, format_flag, severity, rules = "R1,R2,R3,R4", query_text, at, corpus_name;
  bool strict = false, json = false, closure = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a graph against the HDT constraints");
  validate_cmd->add_option("input", input, "Turtle (.ttl) or N-Triples (.nt) file")->required();
  validate_cmd->add_option("--format", format_flag)->check(CLI::IsMember({"turtle", "ntriples"}));
  validate_cmd->add_flag("--strict", strict, "Treat warnings as errors");
  validate_cmd->add_option("--severity", severity, "Per-rule levels, e.g. V2=off,V5=error");
  validate_cmd->add_flag("--json", json, "JSON report");
  validate_cmd->add_flag("--closure", closure, "Take node types from the inferred closure");

  auto* infer_cmd = app.add_subcommand("infer", "Materialize the closure of a graph");
  infer_cmd->add_option("input", input)->required();
  infer_cmd->add_option("-o,--output", output, "Output file (default: standard output)");
  infer_cmd->add_option("--format", format_flag)->check(CLI::IsMember({"turtle", "ntriples"}));
  infer_cmd->add_option("--rules", rules, "Comma list of R1..R4, or none");

  auto* query_cmd = app.add_subcommand("query", "Evaluate a conjunctive query");
  query_cmd->add_option("input", input)->required();
  query_cmd->add_option("query", query_text)->required();
  query_cmd->add_option("--format", format_flag)->check(CLI::IsMember({"turtle", "ntriples"}));
  query_cmd->add_option("--at", at, "ISO 8601 instant");

  auto* export_cmd = app.add_subcommand("export", "Write the builtin ontology as Turtle");
  export_cmd->add_option("-o,--output", output);

  auto* corpus_cmd = app.add_subcommand("corpus", "Write a worked example graph as Turtle");
  corpus_cmd->add_option("name", corpus_name)->required();
  corpus_cmd->add_option("-o,--output", output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const Format format = detect_format(input, format_flag);

    if (validate_cmd->parsed()) {
      Graph g = load(input, format, err);
      ValidationConfig cfg = ValidationConfig::defaults();
      cfg.types_from_closure = closure;
      if (!severity.empty()) apply_severity_overrides(cfg, severity);
      if (strict) cfg.promote_warnings();
      const ValidationReport report = validate(g, builtin_ontology(), cfg);
      out << (json ? format_report_json(report, builtin_ontology()) : format_report_text(report, builtin_ontology()));
      return report.has_errors() ? kValidationErrors : kSuccess;
    }

    if (infer_cmd->parsed()) {
      const InferenceConfig cfg = parse_rules(rules);
      Graph g = load(input, format, err);
      Graph closed = materialize(g, builtin_ontology(), cfg);
      closed.set_prefixes(g.prefixes());
      emit(serialize(closed, format), output, out);
      err << "added " << (closed.size() - g.size()) << " statement(s)\n";
      return kSuccess;
    }

    if (query_cmd->parsed()) {
      Graph g = load(input, format, err);
      PrefixMap prefixes = standard_prefixes(builtin_ontology());
      for (const auto& [p, iri] : g.prefixes()) prefixes[p] = iri;
      Pattern pattern;
      try {
        pattern = parse_query(query_text, prefixes);
      } catch (const ParseError& e) {
        err << "query:1:" << (e.offset() + 1) << ": " << e.detail() << "\n";
        return kUsage;
      }
      if (!at.empty()) {
        try {
          pattern.at = parse_instant(at);
        } catch (const Error&) {
          throw Failure{"bad --at instant '" + at + "'"};
        }
      }
      const std::vector<Binding> rows = solve(g, pattern);
      out << format_bindings(rows, variables(pattern), prefixes);
      return kSuccess;
    }

    if (export_cmd->parsed()) {
      emit(serialize_turtle(ontology_graph()), output, out);
      return kSuccess;
    }

    if (corpus_cmd->parsed()) {
      const CorpusEntry* entry = find_corpus(corpus_name);
      if (entry == nullptr) throw Failure{"unknown corpus '" + corpus_name + "'; valid names: " + corpus_names()};
      emit(serialize_turtle(entry->builder(builtin_ontology())), output, out);
      return kSuccess;
    }
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace hdtkg::cli
