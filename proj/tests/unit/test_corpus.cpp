#include <doctest.h>

#include <set>

#include "hdtkg/corpus.hpp"
#include "hdtkg/query.hpp"
#include "hdtkg/rdf_io.hpp"
#include "hdtkg/reasoner.hpp"
#include "hdtkg/validator.hpp"
#include "hdtkg/vocab.hpp"
#include "support/test_util.hpp"

using namespace hdtkg;
using namespace hdtkg::testing;

namespace {

const Ontology& ont() { return builtin_ontology(); }
Iri r(std::string_view code) { return ont().resolve(code); }
Term x(const std::string& local) { return Term::iri(std::string(vocab::kCorpusBase) + local); }
const Iri kType{std::string(vocab::kRdfType)};

std::set<Term> typed(const Graph& g, std::string_view cls) {
  std::set<Term> out;
  for (const Statement& st : g.match(std::nullopt, kType, Term::iri(r(cls)))) out.insert(st.subject);
  return out;
}

}  // namespace

TEST_CASE("builders are deterministic and counts are frozen") {
  for (const CorpusEntry& e : corpus_entries()) {
    CAPTURE(e.name);
    const Graph a = e.builder(ont());
    const Graph b = e.builder(ont());
    CHECK(a == b);
    CHECK(isomorphic(a, b));
    CHECK(a.size() == e.expected_statement_count);
    CHECK(e.expected_error_count == 0);
    CHECK(materialize(materialize(a, ont()), ont()) == materialize(a, ont()));
  }
  CHECK(find_corpus("lampadistis") != nullptr);
  CHECK(find_corpus("bogus") == nullptr);
}

TEST_CASE("shipped fixtures match the builders byte for byte") {
  for (const CorpusEntry& e : corpus_entries()) {
    CAPTURE(e.name);
    const std::string shipped = read_text(fixture_path(e.name + ".ttl"));
    REQUIRE_FALSE(shipped.empty());
    CHECK(shipped == serialize_turtle(e.builder(ont())));
  }
}

TEST_CASE("palio") {
  const Graph g = build_palio();
  const auto hp6 = g.match(std::nullopt, r("HP6"), std::nullopt);
  REQUIRE(hp6.size() == 1);
  CHECK(hp6[0].validity == parse_time_span("2022-08-17"));
  CHECK(typed(g, "crm:E5") == std::set<Term>{hp6[0].object});
  CHECK(typed(g, "HC4").contains(hp6[0].subject));
  CHECK(typed(g, "HC1").contains(hp6[0].subject));
  CHECK(typed(g, "crm:E53").size() == 1);
  CHECK(typed(g, "crm:E39").contains(x("GiovanniAtzeni")));
  CHECK(typed(g, "crm:E74").size() == 1);
  const Graph closed = materialize(g, ont());
  CHECK(closed.match(hp6[0].subject, r("crm:P129"), hp6[0].object).size() == 1);
}

TEST_CASE("pisa") {
  const Graph g = build_pisa_condition();
  const std::set<Term> spans = typed(g, "crm:E52");
  std::size_t hits = 0;
  for (const Statement& st : g) {
    if (!spans.contains(st.object)) continue;
    for (const Statement& v : g.match(st.object, r("crm:P82"), std::nullopt)) {
      const TimeSpan s = parse_time_span(v.object.value());
      hits += s.start() == parse_instant("1997") && s.end() == parse_instant("1998") ? 1 : 0;
    }
  }
  CHECK(hits == 1);
  CHECK(g.match(std::nullopt, r("crm:P70"), x("PisaTowerAnalysis")).size() == 1);
  CHECK(validate(g, ont()).error_count() == 0);
}

TEST_CASE("cornaro art history") {
  const Graph g = build_cornaro_art_history();
  const std::set<Term> i5 = typed(g, "crminf:I5");
  REQUIRE(i5.size() == 1);
  const Term inference = *i5.begin();
  std::set<Term> premises;
  for (const Statement& st : g.match(inference, r("crminf:J1"), std::nullopt)) premises.insert(st.object);
  CHECK(premises.size() == 2);
  for (const Term& p : premises) CHECK(typed(g, "crminf:I2").contains(p));
  CHECK(path(g, inference, PropertyPath{{r("crminf:J2")}}) == std::set<Term>{x("TitianAttribution")});
  CHECK(g.match(std::nullopt, r("crm:P70"), x("CornaroPainting")).size() == 1);
}

TEST_CASE("cornaro heritage science") {
  const Graph g = build_cornaro_heritage_science();
  const std::set<Term> reached = path(g, x("CornaroPainting"), PropertyPath{{r("crmdig:L1"), r("crmdig:L11")}});
  std::size_t hc7 = 0;
  for (const Term& t : reached) hc7 += typed(g, "HC7").contains(t) ? 1 : 0;
  CHECK(hc7 == 1);
  const Term d11 = *typed(g, "crmdig:D11").begin();
  for (const char* p : {"crm:P17", "crmdig:L12", "crm:P16", "crmdig:L23", "crmdig:L10", "crmdig:L20"}) {
    CHECK_MESSAGE(g.match(d11, r(p), std::nullopt).size() == 1, p);
  }
  const auto chain = path(g, x("SpectroscopyResults"),
                          PropertyPath{{r("crmsci:O16"), r("crmsci:O11"), r("crminf:J2")}});
  CHECK(chain == std::set<Term>{x("RenaissanceBelief")});
  const Term i5 = *typed(g, "crminf:I5").begin();
  CHECK(g.match(i5, r("crminf:J1"), std::nullopt).size() == 2);
}

TEST_CASE("lampadistis") {
  const Graph g = build_lampadistis();
  const std::set<Term> e12 = typed(g, "crm:E12");
  CHECK(e12.size() == 2);
  for (const Term& event : e12) {
    const auto p4 = g.match(event, r("crm:P4"), std::nullopt);
    REQUIRE(p4.size() == 1);
    const auto p82 = g.match(p4[0].object, r("crm:P82"), std::nullopt);
    REQUIRE(p82.size() == 1);
    const TimeSpan s = parse_time_span(p82[0].object.value());
    CHECK(s.start() == parse_instant("1401"));
    CHECK(s.end() == parse_instant("1501"));
  }
  const auto graffiti = g.match(x("Katholicon"), r("crm:P56"), x("KaramanlikaGraffiti"));
  REQUIRE(graffiti.size() == 1);
  CHECK_FALSE(graffiti[0].validity.contains(parse_instant("1700")));
  CHECK(graffiti[0].validity.contains(parse_instant("1800")));
  CHECK(g.match(std::nullopt, r("HP1"), std::nullopt).size() == 1);
  CHECK(g.match(x("LampadistisMonastery"), r("crm:P129"), std::nullopt).size() == 1);
  CHECK(typed(g, "HC8").size() == 1);
  CHECK(validate(g, ont()).error_count() == 0);
}
