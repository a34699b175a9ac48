#include "hdtkg/reasoner.hpp"

#include <deque>

#include "hdtkg/vocab.hpp"

namespace hdtkg {

namespace {

class Materializer {
 public:
  Materializer(const Ontology& ont, const InferenceConfig& cfg)
      : ont_(ont), cfg_(cfg), type_(std::string(vocab::kRdfType)) {}

  Graph run(const Graph& g) {
    Graph out(g);
    std::deque<Statement> work(g.begin(), g.end());
    while (!work.empty()) {
      Statement st = std::move(work.front());
      work.pop_front();
      derive(st, [&](Statement inferred) {
        if (out.insert(inferred) == InsertOutcome::inserted) work.push_back(std::move(inferred));
      });
    }
    return out;
  }

 private:
  template <typename Emit>
  void derive(const Statement& st, Emit&& emit) {
    if (st.predicate == type_) {
      if (cfg_.materialize_supertypes && st.object.is_iri()) {
        auto iri = Iri::parse(st.object.value());
        if (iri && ont_.find_class(*iri) != nullptr) {
          for (const Iri& super : ont_.strict_superclasses(*iri)) {
            emit(Statement{st.subject, type_, Term::iri(super), st.validity});
          }
        }
      }
      return;
    }

    const PropertyDef* def = ont_.find_property(st.predicate);
    if (def == nullptr) return;
    const bool inverse = ont_.is_inverse_property(st.predicate);

    if (cfg_.materialize_superproperties) {
      for (const Iri& super : ont_.strict_superproperties(st.predicate)) {
        emit(Statement{st.subject, super, st.object, st.validity});
      }
    }
    if (cfg_.infer_types_from_domain_range) {
      const auto& subject_class = inverse ? def->range : def->domain;
      const auto& object_class = inverse ? def->domain : def->range;
      if (subject_class) emit(Statement{st.subject, type_, Term::iri(*subject_class), st.validity});
      if (object_class && !st.object.is_literal()) {
        emit(Statement{st.object, type_, Term::iri(*object_class), st.validity});
      }
    }
    if (cfg_.materialize_inverses && def->inverse_id && !st.object.is_literal()) {
      const Iri& other = inverse ? def->id : *def->inverse_id;
      emit(Statement{st.object, other, st.subject, st.validity});
    }
  }

  const Ontology& ont_;
  const InferenceConfig& cfg_;
  Iri type_;
};

}  // namespace

Graph materialize(const Graph& g, const Ontology& ont, const InferenceConfig& cfg) {
  if (!cfg.any()) return g;
  return Materializer(ont, cfg).run(g);
}

bool entails(const Graph& g, const Ontology& ont, const Statement& st, const InferenceConfig& cfg) {
  if (!g.match(st.subject, st.predicate, st.object).empty()) return true;
  return !materialize(g, ont, cfg).match(st.subject, st.predicate, st.object).empty();
}

}  // namespace hdtkg
