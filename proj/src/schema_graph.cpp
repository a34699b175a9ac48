#include "hdtkg/rdf_io.hpp"

#include "hdtkg/vocab.hpp"

namespace hdtkg {

Graph ontology_graph(const Ontology& ont) {
  Graph g(standard_prefixes(ont));
  const Iri type{std::string(vocab::kRdfType)};
  const Iri label{std::string(vocab::kRdfsLabel)};
  auto iri = [](std::string_view s) { return Term::iri(Iri(std::string(s))); };

  for (const ClassDef& c : ont.classes()) {
    g.insert(Term::iri(c.id), type, iri(vocab::kRdfsClass));
    g.insert(Term::iri(c.id), label, Term::literal(c.label));
    for (const Iri& super : c.superclasses) {
      g.insert(Term::iri(c.id), Iri(std::string(vocab::kRdfsSubClassOf)), Term::iri(super));
    }
  }
  for (const PropertyDef& p : ont.properties()) {
    const Term subject = Term::iri(p.id);
    g.insert(subject, type, iri(vocab::kRdfProperty));
    g.insert(subject, label, Term::literal(p.forward_label));
    for (const Iri& super : p.superproperties) {
      g.insert(subject, Iri(std::string(vocab::kRdfsSubPropertyOf)), Term::iri(super));
    }
    if (p.domain) g.insert(subject, Iri(std::string(vocab::kRdfsDomain)), Term::iri(*p.domain));
    if (p.range) g.insert(subject, Iri(std::string(vocab::kRdfsRange)), Term::iri(*p.range));
    if (p.inverse_id) {
      const Term inverse = Term::iri(*p.inverse_id);
      g.insert(inverse, type, iri(vocab::kRdfProperty));
      g.insert(inverse, label, Term::literal(*p.inverse_label));
      g.insert(inverse, Iri(std::string(vocab::kOwlInverseOf)), subject);
      if (p.range) g.insert(inverse, Iri(std::string(vocab::kRdfsDomain)), Term::iri(*p.range));
      if (p.domain) g.insert(inverse, Iri(std::string(vocab::kRdfsRange)), Term::iri(*p.domain));
    }
  }
  return g;
}

}  // namespace hdtkg
