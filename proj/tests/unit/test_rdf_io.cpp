#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "hdtkg/corpus.hpp"
#include "hdtkg/rdf_io.hpp"
#include "hdtkg/vocab.hpp"
#include "support/generators.hpp"

using namespace hdtkg;
using hdtkg::testing::Gen;

namespace {

std::size_t count_lines(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

std::size_t count_substr(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

const ParseDiagnostic* first_error(const ParseResult& r) {
  for (const ParseDiagnostic& d : r.diagnostics) {
    if (d.severity == Severity::error) return &d;
  }
  return nullptr;
}

Iri rdf_type() { return Iri(std::string(vocab::kRdfType)); }

}  // namespace

TEST_CASE("turtle: HP1 example with default prefixes") {
  const ParseResult r = parse_turtle("hdt:PafosGate hdt:HP1 hdt:PafosGateTwin .");
  REQUIRE(r.ok());
  REQUIRE(r.graph.size() == 1);
  const Statement& st = *r.graph.begin();
  CHECK(st.subject == Term::iri("http://example.org/ns/hdt/PafosGate"));
  CHECK(st.predicate == builtin_ontology().resolve("HP1"));
  CHECK(st.validity.is_always());
}

TEST_CASE("turtle: empty input") {
  const ParseResult r = parse_turtle("");
  CHECK(r.ok());
  CHECK(r.graph.empty());
  CHECK(r.diagnostics.empty());
  CHECK(parse_turtle("  # only a comment\n\n").graph.empty());
}

TEST_CASE("turtle: missing object and terminator") {
  const ParseResult r = parse_turtle("x:y x:z");
  CHECK_FALSE(r.ok());
  const ParseDiagnostic* d = first_error(r);
  REQUIRE(d != nullptr);
  CHECK(d->line == 1);
  CHECK(d->column == 1);  // unknown prefix x at the very start
  const ParseResult r2 = parse_turtle("hdt:a hdt:b");
  const ParseDiagnostic* d2 = first_error(r2);
  REQUIRE(d2 != nullptr);
  CHECK(d2->line == 1);
  CHECK(d2->column >= 7);
  CHECK(d2->column <= 12);
}

TEST_CASE("turtle: syntax") {
  const std::string text = R"(@prefix ex: <http://example.org/> .
PREFIX ex2: <http://example.org/two/>
@base <http://example.org/base/> .
ex:a a ex:C , ex:D ;
     ex:p "plain" , 'single' , """long
text""" , '''other''' ;
     ex:q "chat"@fr , "5"^^<http://www.w3.org/2001/XMLSchema#integer> , 7 , -1.5 , 2e3 , true ;
     ex:r [ ex:s ex2:t ; ex:u [ ex:v <rel> ] ] ;
     ex:w _:named .
_:named ex:x "esc\t\u00e9\U0001F600\"" .
ex:b\-c ex:p ex:d%41 .
)";
  const ParseResult r = parse_turtle(text);
  for (const auto& d : r.diagnostics) INFO(to_string(d));
  REQUIRE(r.ok());
  const Term a = Term::iri("http://example.org/a");
  CHECK(r.graph.match(a, rdf_type(), std::nullopt).size() == 2);
  CHECK(r.graph.match(a, Iri("http://example.org/p"), std::nullopt).size() == 4);
  CHECK(r.graph.match(a, Iri("http://example.org/p"), Term::literal("long\ntext")).size() == 1);
  const auto q = r.graph.match(a, Iri("http://example.org/q"), std::nullopt);
  CHECK(q.size() == 6);
  CHECK(std::count(q.begin(), q.end(),
                   Statement{a, Iri("http://example.org/q"), Term::lang_literal("chat", "fr"), TimeSpan::always()}) == 1);
  CHECK(r.graph.match(std::nullopt, Iri("http://example.org/v"), Term::iri("http://example.org/base/rel")).size() == 1);
  CHECK(r.graph.match(std::nullopt, Iri("http://example.org/s"), Term::iri("http://example.org/two/t")).size() == 1);
  CHECK(r.graph.match(Term::blank("named"), std::nullopt, Term::literal("esc\t\xC3\xA9\xF0\x9F\x98\x80\"")).size() == 1);
  CHECK(r.graph.match(Term::iri("http://example.org/b-c"), std::nullopt, Term::iri("http://example.org/d%41")).size() == 1);
  CHECK(r.graph.size() == 19);
}

TEST_CASE("turtle: trailing dot of a prefixed name ends the statement") {
  const ParseResult r = parse_turtle("hdt:a hdt:HP1 hdt:b.\nhdt:c hdt:HP1 hdt:d.");
  REQUIRE(r.ok());
  CHECK(r.graph.size() == 2);
}

TEST_CASE("turtle: collections are rejected") {
  const ParseResult r = parse_turtle("hdt:a hdt:p ( hdt:b ) .");
  CHECK_FALSE(r.ok());
  REQUIRE(first_error(r) != nullptr);
  CHECK(first_error(r)->column == 13);
}

TEST_CASE("turtle: errors locate line and column") {
  const ParseResult r = parse_turtle("hdt:a hdt:HP1 hdt:b .\nhdt:c hdt:HP1 \"open .\n");
  CHECK_FALSE(r.ok());
  const ParseDiagnostic* d = first_error(r);
  REQUIRE(d != nullptr);
  CHECK(d->line == 2);
  CHECK(r.graph.size() == 1);  // statements before the error are kept
  const ParseResult bad_utf8 = parse_turtle("hdt:a hdt:p \"\xff\" .");
  CHECK_FALSE(bad_utf8.ok());
  CHECK(first_error(bad_utf8)->column == 14);
  const ParseResult bad_prefix = parse_turtle("hdt:a zz:p hdt:b .");
  CHECK(first_error(bad_prefix)->column == 7);
}

TEST_CASE("turtle: serializer output") {
  const std::string empty = serialize_turtle(Graph());
  CHECK(empty.find("@prefix hdt: <http://example.org/ns/hdt/> .") != std::string::npos);
  CHECK(count_substr(empty, "@prefix") == count_lines(empty));

  Graph g;
  g.insert(Term::iri("http://example.org/ns/hdtx/a"), builtin_ontology().resolve("HP1"),
           Term::iri("http://example.org/ns/hdtx/b"), parse_time_span("1749/1880"));
  g.insert(Term::iri("http://example.org/ns/hdtx/a"), builtin_ontology().resolve("HP9"),
           Term::iri("http://example.org/ns/hdtx/c"));
  const std::string out = serialize_turtle(g);
  CHECK(count_substr(out, "a rdf:Statement") == 1);
  CHECK(count_substr(out, "rdf:subject") == 1);
  CHECK(count_substr(out, "hdt:validFrom \"1749\"^^hdt:iso8601") == 1);
  CHECK(count_substr(out, "hdt:validTo \"1880\"^^hdt:iso8601") == 1);
  CHECK(serialize_turtle(g) == out);
}

TEST_CASE("n-triples") {
  const std::string three =
      "<http://example.org/a> <http://example.org/p> <http://example.org/b> .\n"
      "_:x <http://example.org/p> \"lit\"@en .\n"
      "<http://example.org/a> <http://example.org/p> \"5\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n";
  const ParseResult ok = parse_ntriples(three);
  CHECK(ok.ok());
  CHECK(ok.graph.size() == 3);

  const ParseResult mixed = parse_ntriples(
      "<http://example.org/a> <http://example.org/p> <http://example.org/b> .\n"
      "<http://example.org/a> <http://example.org/p> .\n"
      "<http://example.org/c> <http://example.org/p> <http://example.org/d> .\n");
  CHECK(mixed.graph.size() == 2);
  REQUIRE(mixed.diagnostics.size() == 1);
  CHECK(mixed.diagnostics[0].line == 2);
  CHECK(mixed.diagnostics[0].severity == Severity::error);

  Graph single;
  single.insert(Term::iri("http://example.org/a"), Iri("http://example.org/p"), Term::literal("x"));
  const std::string line = serialize_ntriples(single);
  CHECK(count_lines(line) == 1);
  CHECK(line.ends_with(" .\n"));
  CHECK(line.find("@prefix") == std::string::npos);

  for (const char* bad : {"<a> <http://x.org/p> <http://x.org/o> .", "<http://x.org/s> <http://x.org/p> \"x\"@ .",
                          "<http://x.org/s> _:p <http://x.org/o> .", "<http://x.org/s> <http://x.org/p> <http://x.org/o>",
                          "\"x\" <http://x.org/p> <http://x.org/o> .",
                          "<http://x.org/s> <http://x.org/p> \"\\q\" ."}) {
    CAPTURE(bad);
    const ParseResult r = parse_ntriples(bad);
    CHECK_FALSE(r.ok());
    CHECK(r.graph.empty());
  }
}

TEST_CASE("n-triples line count follows the reification arithmetic") {
  for (const CorpusEntry& e : corpus_entries()) {
    const Graph g = e.builder(builtin_ontology());
    std::size_t bounded = 0;
    for (const Statement& st : g) bounded += st.validity.start() && st.validity.end() ? 1 : 0;
    CAPTURE(e.name);
    CHECK(count_lines(serialize_ntriples(g)) == g.size() + 5 * bounded);
  }
}

TEST_CASE("corpus round trips in both formats") {
  for (const CorpusEntry& e : corpus_entries()) {
    CAPTURE(e.name);
    const Graph g = e.builder(builtin_ontology());
    const ParseResult t = parse_turtle(serialize_turtle(g));
    REQUIRE(t.ok());
    CHECK(isomorphic(t.graph, g));
    CHECK(serialize_turtle(t.graph) == serialize_turtle(g));
    const ParseResult n = parse_ntriples(serialize_ntriples(g));
    REQUIRE(n.ok());
    CHECK(isomorphic(n.graph, g));
  }
}

TEST_CASE("random graphs round trip in both formats") {
  const Ontology& ont = builtin_ontology();
  Gen gen(99);
  for (int i = 0; i < 60; ++i) {
    const Graph g = gen.graph(ont, i < 50 ? 60 : 1000);
    const std::string ttl = serialize_turtle(g);
    const ParseResult t = parse_turtle(ttl);
    INFO(ttl);
    REQUIRE(t.ok());
    CHECK(isomorphic(t.graph, g));
    const ParseResult n = parse_ntriples(serialize_ntriples(g));
    REQUIRE(n.ok());
    CHECK(isomorphic(n.graph, g));
    CHECK(serialize_turtle(g) == ttl);
  }
}

TEST_CASE("expand and fold validity") {
  Graph g;
  const Term s = Term::iri("http://example.org/s");
  const Iri p("http://example.org/p");
  g.insert(s, p, Term::iri("http://example.org/o"), parse_time_span("1749/1880"));
  g.insert(s, p, Term::iri("http://example.org/o2"), parse_time_span("1749/.."));
  g.insert(s, p, Term::iri("http://example.org/o3"), parse_time_span("../1880"));
  g.insert(s, p, Term::iri("http://example.org/o4"));
  const Graph wire = expand_validity(g);
  CHECK(wire.size() == 6 + 5 + 5 + 1);
  for (const Statement& st : wire) CHECK(st.validity.is_always());
  CHECK(fold_validity(wire) == g);
}

TEST_CASE("reifications outside the validity pattern pass through") {
  const std::string plain = R"(_:r a rdf:Statement ; rdf:subject hdt:a ; rdf:predicate hdt:HP1 ; rdf:object hdt:b .)";
  const ParseResult r = parse_turtle(plain);
  REQUIRE(r.ok());
  CHECK(r.graph.size() == 4);

  const std::string extra = R"(_:r a rdf:Statement ; rdf:subject hdt:a ; rdf:predicate hdt:HP1 ; rdf:object hdt:b ;
    hdt:validFrom "1749"^^hdt:iso8601 ; rdfs:comment "note" .)";
  CHECK(parse_turtle(extra).graph.size() == 6);

  const std::string bad_value = R"(_:r a rdf:Statement ; rdf:subject hdt:a ; rdf:predicate hdt:HP1 ; rdf:object hdt:b ;
    hdt:validFrom "17x9"^^hdt:iso8601 .)";
  CHECK(parse_turtle(bad_value).graph.size() == 5);

  const std::string folded = R"(_:r a rdf:Statement ; rdf:subject hdt:a ; rdf:predicate hdt:HP1 ; rdf:object hdt:b ;
    hdt:validFrom "1749"^^hdt:iso8601 ; hdt:validTo "1880"^^hdt:iso8601 .)";
  const ParseResult f = parse_turtle(folded);
  REQUIRE(f.graph.size() == 1);
  CHECK(f.graph.begin()->validity == parse_time_span("1749/1880"));
}

TEST_CASE("diagnostics always point inside the input") {
  Gen gen(5);
  const std::string base = serialize_turtle(build_lampadistis());
  for (int i = 0; i < 300; ++i) {
    std::string text = base.substr(0, static_cast<std::size_t>(gen.uniform(0, static_cast<int>(base.size()))));
    text += static_cast<char>(gen.uniform(1, 255));
    const ParseResult r = parse_turtle(text);
    const std::size_t lines = count_lines(text) + 1;
    for (const ParseDiagnostic& d : r.diagnostics) {
      CHECK(d.line >= 1);
      CHECK(d.line <= lines);
      CHECK(d.column >= 1);
    }
  }
}
