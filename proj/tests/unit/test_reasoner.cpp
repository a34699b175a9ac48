#include <doctest.h>

#include <set>

#include "hdtkg/corpus.hpp"
#include "hdtkg/reasoner.hpp"
#include "hdtkg/validator.hpp"
#include "hdtkg/vocab.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace hdtkg;
using namespace hdtkg::testing;

namespace {

const Ontology& ont() { return builtin_ontology(); }
Iri r(std::string_view code) { return ont().resolve(code); }
Term x(const std::string& local) { return Term::iri(std::string(vocab::kCorpusBase) + local); }
const Iri kType{std::string(vocab::kRdfType)};

bool has(const Graph& g, const Term& s, const Iri& p, const Term& o) { return !g.match(s, p, o).empty(); }

std::vector<InferenceConfig> all_configs() {
  std::vector<InferenceConfig> out;
  for (int mask = 0; mask < 16; ++mask) {
    out.push_back(InferenceConfig{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0, (mask & 8) != 0});
  }
  return out;
}

}  // namespace

TEST_CASE("HP6 edges gain their P129 counterpart") {
  Graph g;
  g.insert(x("PalioTradition"), r("HP6"), x("PalioRace2022"), parse_time_span("2022-08-17"));
  const Graph closed = materialize(g, ont());
  const auto p129 = closed.match(x("PalioTradition"), r("crm:P129"), x("PalioRace2022"));
  REQUIRE(p129.size() == 1);
  CHECK(p129.front().validity == parse_time_span("2022-08-17"));
  CHECK(has(closed, x("PalioRace2022"), *ont().find_property(r("HP6"))->inverse_id, x("PalioTradition")));
}

TEST_CASE("supertypes of HC3") {
  Graph g;
  g.insert(x("t"), kType, Term::iri(r("HC3")));
  const Graph closed = materialize(g, ont());
  for (const char* c : {"HC1", "crm:E18", "crm:E77"}) CHECK_MESSAGE(has(closed, x("t"), kType, Term::iri(r(c))), c);
}

TEST_CASE("domain and range typing") {
  Graph g;
  g.insert(x("e"), r("HP1"), x("t"));
  InferenceConfig cfg;
  cfg.infer_types_from_domain_range = true;
  const Graph closed = materialize(g, ont(), cfg);
  CHECK(has(closed, x("e"), kType, Term::iri(r("HC1"))));
  CHECK(has(closed, x("t"), kType, Term::iri(r("HC2"))));
  CHECK(has(closed, x("t"), kType, Term::iri(r("crm:E89"))));
  CHECK_FALSE(has(materialize(g, ont()), x("e"), kType, Term::iri(r("HC1"))));
}

TEST_CASE("inverse edges go both ways") {
  const Iri hp1_i = *ont().find_property(r("HP1"))->inverse_id;
  Graph g;
  g.insert(x("t"), hp1_i, x("e"));
  const Graph closed = materialize(g, ont());
  CHECK(has(closed, x("e"), r("HP1"), x("t")));
}

TEST_CASE("literals never become subjects") {
  Graph g;
  g.insert(x("e"), r("HP1"), Term::literal("not a node"));
  InferenceConfig cfg = InferenceConfig::all();
  const Graph closed = materialize(g, ont(), cfg);
  for (const Statement& st : closed) CHECK_FALSE(st.subject.is_literal());
}

TEST_CASE("no rules means no change") {
  const Graph g = build_palio();
  CHECK(materialize(g, ont(), InferenceConfig::none()) == g);
}

TEST_CASE("corpus and random graphs match the naive fixpoint under every rule set") {
  Gen gen(2022);
  std::vector<Graph> graphs;
  for (const CorpusEntry& e : corpus_entries()) graphs.push_back(e.builder(ont()));
  for (int i = 0; i < 100; ++i) graphs.push_back(gen.graph(ont(), 50));
  const auto configs = all_configs();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const InferenceConfig& cfg = configs[i % configs.size()];
    const Graph closed = materialize(graphs[i], ont(), cfg);
    CHECK(closed == naive_closure(graphs[i], ont(), cfg));
    CHECK(materialize(closed, ont(), cfg) == closed);
    for (const Statement& st : graphs[i]) CHECK(closed.contains(st));
  }
}

TEST_CASE("materialize is monotone") {
  Gen gen(17);
  for (int i = 0; i < 50; ++i) {
    const Graph a = gen.graph(ont(), 30);
    Graph ab = a;
    for (const Statement& st : gen.graph(ont(), 30)) ab.insert(st);
    const Graph ca = materialize(a, ont(), InferenceConfig::all());
    const Graph cab = materialize(ab, ont(), InferenceConfig::all());
    for (const Statement& st : ca) CHECK(cab.contains(st));
  }
}

TEST_CASE("entails") {
  const Graph palio = build_palio();
  const Statement hp6 = *palio.match(std::nullopt, r("HP6"), std::nullopt).begin();
  CHECK(entails(palio, ont(), hp6));
  CHECK(entails(palio, ont(), Statement{hp6.subject, r("crm:P129"), hp6.object, TimeSpan::always()}));
  CHECK_FALSE(entails(Graph(), ont(), hp6));
  const Graph art = build_cornaro_art_history();
  CHECK(art.match(std::nullopt, r("HP6"), std::nullopt).empty());
  CHECK(materialize(art, ont()).match(std::nullopt, r("crm:P129"), std::nullopt).empty());
  CHECK_FALSE(entails(art, ont(),
                      Statement{x("CornaroPainting"), r("crm:P129"), x("TitianAttribution"), TimeSpan::always()}));
}

TEST_CASE("closure without R3 never puts a new node in V1 error") {
  Gen gen(23);
  std::vector<Graph> graphs;
  for (const CorpusEntry& e : corpus_entries()) graphs.push_back(e.builder(ont()));
  for (int i = 0; i < 60; ++i) graphs.push_back(gen.graph(ont(), 40));
  auto offenders = [](const Graph& g) {
    std::set<Term> nodes;
    for (const Violation& v : validate(g, ont()).violations) {
      if (v.rule_id == "V1" && v.severity == Severity::error && v.node) nodes.insert(*v.node);
    }
    return nodes;
  };
  for (const Graph& g : graphs) {
    const std::set<Term> before = offenders(g);
    for (const Term& n : offenders(materialize(g, ont()))) CHECK_MESSAGE(before.contains(n), n.canonical());
  }
}
