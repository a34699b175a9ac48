#include "generators.hpp"

#include "hdtkg/vocab.hpp"

namespace hdtkg::testing {

Instant Gen::instant() {
  CivilTime c;
  c.year = uniform(1, 2100);
  c.month = uniform(1, 12);
  c.day = uniform(1, 28);
  c.hour = uniform(0, 23);
  return Instant::from_civil(c);
}

TimeSpan Gen::time_span() {
  switch (uniform(0, 4)) {
    case 0:
    case 1:
      return TimeSpan::always();
    case 2: {
      Instant a = instant();
      return TimeSpan(a, std::nullopt);
    }
    case 3: {
      Instant b = instant();
      return TimeSpan(std::nullopt, b);
    }
    default: {
      Instant a = instant();
      Instant b = instant();
      if (a == b) return TimeSpan::always();
      if (b < a) std::swap(a, b);
      return TimeSpan(a, b, chance(0.2), chance(0.2));
    }
  }
}

std::string Gen::literal_text() {
  static const std::vector<std::string> pieces = {"a", "Z", " ", "\"", "\\", "\n", "\t", "é", "1", "ø", "x y", "è"};
  std::string out;
  int n = uniform(0, 5);
  for (int i = 0; i < n; ++i) out += pick(pieces);
  return out;
}

Term Gen::node(int pool) {
  int i = uniform(0, pool - 1);
  if (i % 4 == 3) return Term::blank("n" + std::to_string(i));
  return Term::iri(std::string(vocab::kCorpusBase) + "N" + std::to_string(i));
}

Graph Gen::graph(const Ontology& ont, int max_statements) {
  std::vector<Iri> predicates;
  for (const PropertyDef& p : ont.properties()) {
    predicates.push_back(p.id);
    if (p.inverse_id) predicates.push_back(*p.inverse_id);
  }
  predicates.push_back(Iri(std::string(vocab::kCorpusBase) + "unregistered"));
  std::vector<Iri> classes;
  for (const ClassDef& c : ont.classes()) classes.push_back(c.id);
  const Iri type{std::string(vocab::kRdfType)};

  Graph g(standard_prefixes(ont));
  const int n = uniform(0, max_statements);
  const int pool = uniform(2, 12);
  for (int i = 0; i < n; ++i) {
    Term s = node(pool);
    if (chance(0.35)) {
      g.insert(s, type, Term::iri(pick(classes)), time_span());
    } else if (chance(0.1)) {
      g.insert(s, pick(predicates), Term::literal(literal_text()), time_span());
    } else {
      g.insert(s, pick(predicates), node(pool), time_span());
    }
  }
  return g;
}

}  // namespace hdtkg::testing
