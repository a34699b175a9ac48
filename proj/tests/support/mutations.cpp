#include "mutations.hpp"

#include <algorithm>

#include "hdtkg/corpus.hpp"
#include "hdtkg/vocab.hpp"

namespace hdtkg::testing {

namespace {

Term x(const std::string& local) { return Term::iri(std::string(vocab::kCorpusBase) + local); }

void add(Graph& g, const Ontology& ont, const std::string& s, const std::string& p, const std::string& o) {
  const Iri pred = p == "a" ? Iri(std::string(vocab::kRdfType)) : ont.resolve(p);
  const Term obj = p == "a" ? Term::iri(ont.resolve(o)) : x(o);
  g.insert(x(s), pred, obj);
}

void drop(Graph& g, const Ontology& ont, const std::string& s, const std::string& p, const std::string& o) {
  g.remove(Statement{x(s), ont.resolve(p), x(o), TimeSpan::always()});
}

}  // namespace

const std::vector<Mutation>& corpus_mutations() {
  static const std::vector<Mutation> all = {
      {"duplicate HP1", "lampadistis",
       [](Graph& g, const Ontology& ont) {
         add(g, ont, "LampadistisTwin2", "a", "hdt:HC2");
         add(g, ont, "LampadistisMonastery", "hdt:HP1", "LampadistisTwin2");
       },
       "V2", Severity::error},
      {"HP5 with HC1-only subject", "lampadistis",
       [](Graph& g, const Ontology& ont) {
         add(g, ont, "PlainEntity", "a", "hdt:HC1");
         add(g, ont, "PlainEntityTwin", "a", "hdt:HC2");
         add(g, ont, "PlainEntity", "hdt:HP1", "PlainEntityTwin");
         add(g, ont, "PlainEntity", "hdt:HP5", "LampadistisHistory");
       },
       "V1", Severity::error},
      {"HP3 2-cycle", "palio",
       [](Graph& g, const Ontology& ont) {
         add(g, ont, "TwinPart", "a", "hdt:HC2");
         add(g, ont, "PalioDiSienaTwin", "hdt:HP3", "TwinPart");
         add(g, ont, "TwinPart", "hdt:HP3", "PalioDiSienaTwin");
       },
       "V4", Severity::error},
      {"HP3 3-cycle", "palio",
       [](Graph& g, const Ontology& ont) {
         add(g, ont, "TwinPartA", "a", "hdt:HC2");
         add(g, ont, "TwinPartB", "a", "hdt:HC2");
         add(g, ont, "PalioDiSienaTwin", "hdt:HP3", "TwinPartA");
         add(g, ont, "TwinPartA", "hdt:HP3", "TwinPartB");
         add(g, ont, "TwinPartB", "hdt:HP3", "PalioDiSienaTwin");
       },
       "V4", Severity::error},
      {"malformed ISO literal", "lampadistis",
       [](Graph& g, const Ontology& ont) {
         const Iri p82 = ont.resolve("crm:P82");
         g.remove(Statement{x("LatinChapelConstructionDate"), p82, Term::literal("1401/1500"), TimeSpan::always()});
         g.insert(x("LatinChapelConstructionDate"), p82, Term::literal("14O1/1500"));
       },
       "V6", Severity::error},
      {"unknown predicate", "lampadistis",
       [](Graph& g, const Ontology&) {
         g.insert(x("LampadistisMonastery"), Iri(std::string(vocab::kCorpusBase) + "hasFoo"), x("LampadistisTwin"));
       },
       "V5", Severity::warning},
      {"HP6 on non-HC4 subject", "palio",
       [](Graph& g, const Ontology& ont) { add(g, ont, "PiazzaDelCampo", "hdt:HP6", "PalioRace2022"); },
       "V1", Severity::error},
      {"untyped participant", "lampadistis",
       [](Graph& g, const Ontology& ont) { add(g, ont, "UntypedThing", "hdt:HP5", "LampadistisHistory"); },
       "V5", Severity::warning},
      {"removed HP5 on an HC3", "lampadistis",
       [](Graph& g, const Ontology& ont) { drop(g, ont, "LampadistisMonastery", "hdt:HP5", "LampadistisHistory"); },
       "V3", Severity::warning},
      {"missing HP1", "lampadistis",
       [](Graph& g, const Ontology& ont) { drop(g, ont, "LampadistisMonastery", "hdt:HP1", "LampadistisTwin"); },
       "V2", Severity::warning},
  };
  return all;
}

std::vector<Violation> new_violations(const ValidationReport& before, const ValidationReport& after) {
  std::vector<Violation> out;
  for (const Violation& v : after.violations) {
    if (std::find(before.violations.begin(), before.violations.end(), v) == before.violations.end()) {
      out.push_back(v);
    }
  }
  return out;
}

MutationOutcome run_mutation(const Mutation& m, const Ontology& ont) {
  const CorpusEntry* entry = find_corpus(m.corpus);
  if (entry == nullptr) return {false, "no corpus " + m.corpus};
  Graph g = entry->builder(ont);
  const ValidationReport before = validate(g, ont);
  const Graph original = g;
  m.apply(g, ont);
  if (g == original) return {false, "mutation did not change the graph"};
  const ValidationReport after = validate(g, ont);
  const std::vector<Violation> fresh = new_violations(before, after);
  if (fresh.empty()) return {false, "no new violation"};
  for (const Violation& v : fresh) {
    if (v.rule_id != m.rule_id || v.severity != m.severity) {
      return {false, "unexpected " + v.rule_id + " " + to_string(v.severity) + ": " + v.message};
    }
  }
  return {true, std::to_string(fresh.size()) + " x " + m.rule_id + " " + to_string(m.severity)};
}

}  // namespace hdtkg::testing
