#include <doctest.h>

#include "hdtkg/graph.hpp"
#include "hdtkg/ontology.hpp"
#include "support/generators.hpp"

using namespace hdtkg;
using hdtkg::testing::Gen;

namespace {

Graph shuffle_labels(const Graph& g, Gen& gen) {
  std::unordered_map<std::string, std::string> labels;
  for (const Statement& st : g) {
    for (const Term* t : {&st.subject, &st.object}) {
      if (t->is_blank() && !labels.contains(t->value())) labels[t->value()] = "z" + std::to_string(gen.uniform(0, 1 << 30)) + "_" + std::to_string(labels.size());
    }
  }
  return relabel_blanks(g, labels);
}

const Iri p("http://example.org/p");
const Iri q("http://example.org/q");

}  // namespace

TEST_CASE("isomorphism up to blank relabeling") {
  Gen gen(3);
  for (int i = 0; i < 100; ++i) {
    const Graph g = gen.graph(builtin_ontology(), 40);
    const Graph h = shuffle_labels(g, gen);
    CHECK(isomorphic(g, h));
    CHECK(canonical_blank_labels(g).size() == canonical_blank_labels(h).size());
  }
}

TEST_CASE("non-isomorphic graphs are told apart") {
  Graph a, b;
  a.insert(Term::blank("x"), p, Term::blank("y"));
  a.insert(Term::blank("y"), p, Term::blank("x"));
  b.insert(Term::blank("x"), p, Term::blank("y"));
  b.insert(Term::blank("y"), p, Term::blank("z"));
  CHECK_FALSE(isomorphic(a, b));
  Graph c = a;
  c.insert(Term::blank("x"), q, Term::literal("v"), parse_time_span("1997"));
  Graph d = a;
  d.insert(Term::blank("x"), q, Term::literal("v"), parse_time_span("1998"));
  CHECK_FALSE(isomorphic(c, d));
  CHECK(isomorphic(c, c));
}

TEST_CASE("symmetric structures need the tie-break search") {
  // Two disjoint 3-cycles against one 6-cycle: colour refinement alone
  // cannot separate them.
  Graph two, six;
  for (int i = 0; i < 3; ++i) {
    two.insert(Term::blank("a" + std::to_string(i)), p, Term::blank("a" + std::to_string((i + 1) % 3)));
    two.insert(Term::blank("b" + std::to_string(i)), p, Term::blank("b" + std::to_string((i + 1) % 3)));
  }
  for (int i = 0; i < 6; ++i) six.insert(Term::blank("c" + std::to_string(i)), p, Term::blank("c" + std::to_string((i + 1) % 6)));
  CHECK_FALSE(isomorphic(two, six));
  Gen gen(4);
  CHECK(isomorphic(two, shuffle_labels(two, gen)));
  CHECK(isomorphic(six, shuffle_labels(six, gen)));
}

TEST_CASE("canonical labels are dense and structural") {
  Graph g;
  g.insert(Term::blank("q"), p, Term::iri("http://example.org/x"));
  g.insert(Term::blank("r"), q, Term::iri("http://example.org/x"));
  const auto labels = canonical_blank_labels(g);
  CHECK(labels.size() == 2);
  std::set<std::string> values;
  for (const auto& [from, to] : labels) values.insert(to);
  CHECK(values == std::set<std::string>{"b0", "b1"});
}
