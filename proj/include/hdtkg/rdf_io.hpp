#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hdtkg/errors.hpp"
#include "hdtkg/graph.hpp"
#include "hdtkg/ontology.hpp"

namespace hdtkg {

struct ParseDiagnostic {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based, in bytes
  std::string message;
  Severity severity = Severity::error;
};

std::string to_string(const ParseDiagnostic& d);

struct ParseResult {
  Graph graph;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const noexcept;
};

/// Turtle subset: @prefix/@base (and the SPARQL-style PREFIX/BASE), IRIs,
/// prefixed names, blank node labels and property lists, `a`, all four
/// string quoting styles, language tags, datatypes, and the numeric and
/// boolean shorthands. Collections are rejected. Parsing stops at the first
/// syntax error; statements read before it are kept.
///
/// Prefix declarations merge over standard_prefixes(ont). Reified statements
/// carrying hdt:validFrom / hdt:validTo are folded into Statement::validity.
ParseResult parse_turtle(std::string_view text, const Ontology& ont = builtin_ontology());

// Line-oriented; a bad line yields one diagnostic and parsing continues.
ParseResult parse_ntriples(std::string_view text, const Ontology& ont = builtin_ontology());

// Deterministic. Prefix header from the graph's prefixes over the standard
// ones, then statements grouped by subject.
std::string serialize_turtle(const Graph& g, const Ontology& ont = builtin_ontology());
std::string serialize_ntriples(const Graph& g, const Ontology& ont = builtin_ontology());

/// Validity on the wire. Every statement whose validity is not "always"
/// becomes a fresh blank node B with
///   B rdf:type rdf:Statement ; rdf:subject s ; rdf:predicate p ; rdf:object o ;
///     hdt:validFrom "start"^^hdt:iso8601 ; hdt:validTo "end"^^hdt:iso8601 .
/// where an unbounded side omits its quad. The result holds only "always"
/// statements.
Graph expand_validity(const Graph& g, const Ontology& ont = builtin_ontology());

// Inverse of expand_validity. Reification nodes that do not follow the
// pattern exactly (extra or missing quads, unparseable values, the node used
// as an object) are left as they are.
Graph fold_validity(const Graph& wire, const Ontology& ont = builtin_ontology());

// The registry as RDFS: every class and property with its label, its super
// links, domain, range and, for HDT properties, the owl:inverseOf partner.
Graph ontology_graph(const Ontology& ont = builtin_ontology());

}  // namespace hdtkg
