#include <doctest.h>

#include <algorithm>

#include "hdtkg/corpus.hpp"
#include "hdtkg/errors.hpp"
#include "hdtkg/graph.hpp"
#include "hdtkg/vocab.hpp"
#include "support/generators.hpp"

using namespace hdtkg;
using hdtkg::testing::Gen;

namespace {

Term ex(const std::string& local) { return Term::iri("http://example.org/ns/hdt/" + local); }
Iri hp(const std::string& code) { return builtin_ontology().resolve(code); }

std::vector<Statement> scan(const Graph& g, const std::optional<Term>& s, const std::optional<Iri>& p,
                            const std::optional<Term>& o, std::optional<Instant> at) {
  std::vector<Statement> out;
  for (const Statement& st : g) {
    if (s && st.subject != *s) continue;
    if (p && st.predicate != *p) continue;
    if (o && st.object != *o) continue;
    if (at && !st.validity.contains(*at)) continue;
    out.push_back(st);
  }
  return out;
}

}  // namespace

TEST_CASE("insert") {
  Graph g;
  CHECK(g.insert(ex("PafosGate"), hp("HP1"), ex("PafosGateTwin")) == InsertOutcome::inserted);
  CHECK(g.size() == 1);
  CHECK(g.insert(ex("PafosGate"), hp("HP1"), ex("PafosGateTwin")) == InsertOutcome::duplicate);
  CHECK(g.size() == 1);
  CHECK_THROWS_AS(g.insert(Term::literal("x"), hp("HP1"), ex("t")), MalformedStatement);
  CHECK(g.size() == 1);
}

TEST_CASE("statements differing only in validity coexist") {
  Graph g;
  g.insert(ex("a"), hp("HP1"), ex("b"));
  g.insert(ex("a"), hp("HP1"), ex("b"), parse_time_span("1749/1880"));
  CHECK(g.size() == 2);
  CHECK(g.match(ex("a"), std::nullopt, std::nullopt).size() == 2);
  CHECK(g.match(ex("a"), std::nullopt, std::nullopt, parse_instant("1700")).size() == 1);
}

TEST_CASE("match") {
  const Graph lampadistis = build_lampadistis();
  CHECK(lampadistis.match(std::nullopt, hp("HP1"), std::nullopt).size() == 1);
  Graph one;
  one.insert(ex("a"), hp("crm:P56"), ex("b"), parse_time_span("1749/1880"));
  CHECK(one.match(std::nullopt, std::nullopt, std::nullopt, parse_instant("1700-01-01")).empty());
  CHECK(one.match(std::nullopt, std::nullopt, std::nullopt, parse_instant("1800-01-01")).size() == 1);
  CHECK(Graph().match(std::nullopt, std::nullopt, std::nullopt).empty());
  CHECK(one.match(ex("zzz"), std::nullopt, std::nullopt).empty());
}

TEST_CASE("remove") {
  Graph g;
  const Statement st{ex("a"), hp("HP1"), ex("b"), TimeSpan::always()};
  g.insert(st);
  g.insert(ex("a"), hp("HP9"), ex("c"));
  CHECK(g.remove(st));
  CHECK(g.size() == 1);
  CHECK_FALSE(g.remove(st));
  CHECK(g.match(ex("a"), hp("HP1"), std::nullopt).empty());
  CHECK(g.match(std::nullopt, std::nullopt, ex("b")).empty());
  CHECK(g.match(ex("a"), std::nullopt, std::nullopt).size() == 1);
}

TEST_CASE("indexed match equals a linear scan") {
  const Ontology& ont = builtin_ontology();
  Gen gen(7);
  for (int round = 0; round < 8; ++round) {
    Graph g = gen.graph(ont, round < 6 ? 300 : 10000);
    // Remove a few so the indexes see deletions too.
    std::vector<Statement> all(g.begin(), g.end());
    for (std::size_t i = 0; i < all.size(); i += 7) g.remove(all[i]);
    std::vector<Statement> sample(g.begin(), g.end());
    for (int q = 0; q < 60 && !sample.empty(); ++q) {
      const Statement& probe = sample[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(sample.size()) - 1))];
      const std::optional<Term> s = gen.chance(0.5) ? std::optional<Term>(probe.subject) : std::nullopt;
      const std::optional<Iri> p = gen.chance(0.5) ? std::optional<Iri>(probe.predicate) : std::nullopt;
      const std::optional<Term> o = gen.chance(0.5) ? std::optional<Term>(probe.object) : std::nullopt;
      const std::optional<Instant> at = gen.chance(0.3) ? std::optional<Instant>(gen.instant()) : std::nullopt;
      CHECK(g.match(s, p, o, at) == scan(g, s, p, o, at));
    }
    CHECK(g.match(std::nullopt, std::nullopt, std::nullopt) == std::vector<Statement>(g.begin(), g.end()));
  }
}

TEST_CASE("copies keep working indexes") {
  Graph a;
  a.insert(ex("a"), hp("HP1"), ex("b"));
  Graph b = a;
  b.insert(ex("c"), hp("HP1"), ex("d"));
  a.clear();
  CHECK(a.empty());
  CHECK(b.match(std::nullopt, hp("HP1"), std::nullopt).size() == 2);
  Graph c;
  c = b;
  b.clear();
  CHECK(c.match(ex("c"), std::nullopt, std::nullopt).size() == 1);
  Graph d = std::move(c);
  CHECK(d.match(std::nullopt, std::nullopt, ex("b")).size() == 1);
}

TEST_CASE("always statements match at every sampled instant") {
  Gen gen(11);
  Graph g = build_palio();
  for (int i = 0; i < 500; ++i) {
    const Instant t(static_cast<std::int64_t>(gen.uniform(-10000, 10000)) * 31556952LL);
    const auto hits = g.match(std::nullopt, std::nullopt, std::nullopt, t);
    for (const Statement& st : g) {
      if (st.validity.is_always()) CHECK(std::binary_search(hits.begin(), hits.end(), st));
    }
  }
}
