#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hdtkg/corpus.hpp"
#include "hdtkg/errors.hpp"
#include "hdtkg/ontology.hpp"
#include "hdtkg/query.hpp"
#include "hdtkg/rdf_io.hpp"
#include "hdtkg/reasoner.hpp"
#include "hdtkg/validator.hpp"

namespace py = pybind11;
using namespace hdtkg;

namespace {

using StatementTuple = std::tuple<std::string, std::string, std::string, std::string>;

StatementTuple to_tuple(const Statement& st) {
  return {st.subject.canonical(), st.predicate.str(), st.object.canonical(), format_time_span(st.validity)};
}

// "crm:E5", "HC1", "_:b0" or a full IRI.
Term node_term(const std::string& text) {
  if (text.starts_with("_:")) return Term::blank(text.substr(2));
  if (auto expanded = expand_curie(standard_prefixes(builtin_ontology()), text)) return Term::iri(Iri(*expanded));
  if (Iri::is_valid(text)) return Term::iri(Iri(text));
  return Term::iri(builtin_ontology().resolve(text));
}

Iri predicate_iri(const std::string& text) {
  if (text == "a") return Iri(std::string(vocab::kRdfType));
  const Term t = node_term(text);
  if (t.kind() != TermKind::iri) throw py::value_error("predicate must be an IRI: " + text);
  return Iri(t.value());
}

ParseResult checked(ParseResult r) {
  if (!r.ok()) {
    std::string msg;
    for (const ParseDiagnostic& d : r.diagnostics) {
      if (d.severity == Severity::error) msg += to_string(d) + "\n";
    }
    throw py::value_error(msg);
  }
  return r;
}

py::dict violation_dict(const Violation& v) {
  py::dict d;
  d["rule_id"] = v.rule_id;
  d["severity"] = std::string(to_string(v.severity));
  d["message"] = v.message;
  d["statement"] = v.statement ? py::cast(to_tuple(*v.statement)) : py::none();
  d["node"] = v.node ? py::cast(v.node->canonical()) : py::none();
  std::vector<std::string> cycle;
  for (const Term& t : v.cycle) cycle.push_back(t.canonical());
  d["cycle"] = cycle;
  d["explanation"] = explain(v, builtin_ontology());
  return d;
}

InferenceConfig rules_config(const std::vector<std::string>& rules) {
  InferenceConfig cfg = InferenceConfig::none();
  for (const std::string& r : rules) {
    if (r == "R1") cfg.materialize_supertypes = true;
    else if (r == "R2") cfg.materialize_superproperties = true;
    else if (r == "R3") cfg.infer_types_from_domain_range = true;
    else if (r == "R4") cfg.materialize_inverses = true;
    else throw py::value_error("unknown rule " + r);
  }
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_hdtkg, m) {
  m.doc() = "Heritage Digital Twin knowledge graph engine";

  // Translators run newest first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<LookupError>(m, "LookupError", PyExc_LookupError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def(
          "add",
          [](Graph& g, const std::string& s, const std::string& p, const std::string& o, const std::string& validity,
             bool literal) {
            Term object = literal ? Term::literal(o) : node_term(o);
            return g.insert(node_term(s), predicate_iri(p), object, parse_time_span(validity)) ==
                   InsertOutcome::inserted;
          },
          py::arg("subject"), py::arg("predicate"), py::arg("object"), py::arg("validity") = "always",
          py::arg("literal") = false)
      .def("__len__", &Graph::size)
      .def("statements",
           [](const Graph& g) {
             std::vector<StatementTuple> out;
             for (const Statement& st : g) out.push_back(to_tuple(st));
             return out;
           })
      .def(
          "match",
          [](const Graph& g, std::optional<std::string> s, std::optional<std::string> p,
             std::optional<std::string> o, std::optional<std::string> at) {
            std::optional<Term> st = s ? std::optional<Term>(node_term(*s)) : std::nullopt;
            std::optional<Iri> pt = p ? std::optional<Iri>(predicate_iri(*p)) : std::nullopt;
            std::optional<Term> ot = o ? std::optional<Term>(node_term(*o)) : std::nullopt;
            std::optional<Instant> instant = at ? std::optional<Instant>(parse_instant(*at)) : std::nullopt;
            std::vector<StatementTuple> out;
            for (const Statement& x : g.match(st, pt, ot, instant)) out.push_back(to_tuple(x));
            return out;
          },
          py::arg("subject") = py::none(), py::arg("predicate") = py::none(), py::arg("object") = py::none(),
          py::arg("at") = py::none())
      .def("isomorphic", [](const Graph& a, const Graph& b) { return isomorphic(a, b); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

  m.def("parse_turtle", [](const std::string& text) { return checked(parse_turtle(text)).graph; });
  m.def("parse_ntriples", [](const std::string& text) { return checked(parse_ntriples(text)).graph; });
  m.def("serialize_turtle", [](const Graph& g) { return serialize_turtle(g); });
  m.def("serialize_ntriples", [](const Graph& g) { return serialize_ntriples(g); });

  m.def(
      "validate",
      [](const Graph& g, bool strict, const std::string& severity) {
        ValidationConfig cfg = ValidationConfig::defaults();
        if (!severity.empty()) apply_severity_overrides(cfg, severity);
        if (strict) cfg.promote_warnings();
        const ValidationReport report = validate(g, builtin_ontology(), cfg);
        py::list out;
        for (const Violation& v : report.violations) out.append(violation_dict(v));
        return out;
      },
      py::arg("graph"), py::arg("strict") = false, py::arg("severity") = "");
  m.def(
      "materialize",
      [](const Graph& g, const std::vector<std::string>& rules) {
        return materialize(g, builtin_ontology(), rules_config(rules));
      },
      py::arg("graph"), py::arg("rules") = std::vector<std::string>{"R1", "R2", "R3", "R4"});
  m.def(
      "query",
      [](const Graph& g, const std::string& text, std::optional<std::string> at) {
        Pattern pattern = parse_query(text, standard_prefixes(builtin_ontology()));
        if (at) pattern.at = parse_instant(*at);
        std::vector<std::map<std::string, std::string>> rows;
        for (const Binding& b : solve(g, pattern)) {
          std::map<std::string, std::string> row;
          for (const auto& [name, term] : b) row[name] = term.canonical();
          rows.push_back(std::move(row));
        }
        return rows;
      },
      py::arg("graph"), py::arg("query"), py::arg("at") = py::none());

  m.def("corpus_names", [] {
    std::vector<std::string> names;
    for (const CorpusEntry& e : corpus_entries()) names.push_back(e.name);
    return names;
  });
  m.def("corpus", [](const std::string& name) {
    const CorpusEntry* e = find_corpus(name);
    if (e == nullptr) throw py::key_error(name);
    return e->builder(builtin_ontology());
  });

  m.def("export_ontology", [] { return serialize_turtle(ontology_graph()); });
  m.def("is_subclass_of", [](const std::string& sub, const std::string& super) {
    const Ontology& ont = builtin_ontology();
    return ont.is_subclass_of(ont.resolve(sub), ont.resolve(super));
  });
  m.def("is_subproperty_of", [](const std::string& sub, const std::string& super) {
    const Ontology& ont = builtin_ontology();
    return ont.is_subproperty_of(ont.resolve(sub), ont.resolve(super));
  });
  m.def("hdt_classes", [] {
    std::vector<std::pair<std::string, std::string>> out;
    const Ontology& ont = builtin_ontology();
    for (const ClassDef& c : ont.classes()) {
      if (c.id.str().starts_with(ont.hdt_base())) out.emplace_back(c.code, c.label);
    }
    return out;
  });
}
