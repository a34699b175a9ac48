#include "oracles.hpp"

#include <set>
#include <vector>

#include "hdtkg/vocab.hpp"

namespace hdtkg::testing {

namespace {

template <typename Supers>
bool dfs(const Iri& from, const Iri& target, Supers&& supers, std::set<std::string>& seen) {
  if (from == target) return true;
  if (!seen.insert(from.str()).second) return false;
  for (const Iri& next : supers(from)) {
    if (dfs(next, target, supers, seen)) return true;
  }
  return false;
}

std::vector<Iri> declared_superclasses(const Ontology& ont, const Iri& c) {
  for (const ClassDef& def : ont.classes()) {
    if (def.id == c) return def.superclasses;
  }
  return {};
}

std::vector<Iri> declared_superproperties(const Ontology& ont, const Iri& p) {
  for (const PropertyDef& def : ont.properties()) {
    if (def.id == p) return def.superproperties;
  }
  return {};
}

std::vector<Iri> all_superclasses(const Ontology& ont, const Iri& c) {
  std::vector<Iri> out;
  for (const ClassDef& def : ont.classes()) {
    if (def.id != c && dfs_subclass(ont, c, def.id)) out.push_back(def.id);
  }
  return out;
}

std::vector<Iri> all_superproperties(const Ontology& ont, const Iri& p) {
  std::vector<Iri> out;
  for (const PropertyDef& def : ont.properties()) {
    if (def.id != p && dfs_subproperty(ont, p, def.id)) out.push_back(def.id);
  }
  return out;
}

// The forward definition and direction of `p`, if registered.
const PropertyDef* lookup(const Ontology& ont, const Iri& p, bool& inverse) {
  for (const PropertyDef& def : ont.properties()) {
    if (def.id == p) {
      inverse = false;
      return &def;
    }
    if (def.inverse_id && *def.inverse_id == p) {
      inverse = true;
      return &def;
    }
  }
  return nullptr;
}

}  // namespace

bool dfs_subclass(const Ontology& ont, const Iri& sub, const Iri& super) {
  std::set<std::string> seen;
  return dfs(sub, super, [&](const Iri& c) { return declared_superclasses(ont, c); }, seen);
}

bool dfs_subproperty(const Ontology& ont, const Iri& sub, const Iri& super) {
  std::set<std::string> seen;
  return dfs(sub, super, [&](const Iri& p) { return declared_superproperties(ont, p); }, seen);
}

Graph naive_closure(const Graph& g, const Ontology& ont, const InferenceConfig& cfg) {
  const Iri type{std::string(vocab::kRdfType)};
  Graph out(g);
  for (;;) {
    std::vector<Statement> fresh;
    for (const Statement& st : out) {
      if (st.predicate == type) {
        if (!cfg.materialize_supertypes || !st.object.is_iri()) continue;
        const Iri c(st.object.value());
        bool registered = false;
        for (const ClassDef& def : ont.classes()) registered = registered || def.id == c;
        if (!registered) continue;
        for (const Iri& d : all_superclasses(ont, c)) fresh.push_back({st.subject, type, Term::iri(d), st.validity});
        continue;
      }
      bool inverse = false;
      const PropertyDef* def = lookup(ont, st.predicate, inverse);
      if (def == nullptr) continue;
      if (cfg.materialize_superproperties) {
        for (const Iri& q : all_superproperties(ont, def->id)) {
          if (!inverse) {
            fresh.push_back({st.subject, q, st.object, st.validity});
            continue;
          }
          bool unused = false;
          const PropertyDef* qdef = lookup(ont, q, unused);
          if (qdef != nullptr && qdef->inverse_id) fresh.push_back({st.subject, *qdef->inverse_id, st.object, st.validity});
        }
      }
      if (cfg.infer_types_from_domain_range) {
        const auto& s_class = inverse ? def->range : def->domain;
        const auto& o_class = inverse ? def->domain : def->range;
        if (s_class) fresh.push_back({st.subject, type, Term::iri(*s_class), st.validity});
        if (o_class && !st.object.is_literal()) fresh.push_back({st.object, type, Term::iri(*o_class), st.validity});
      }
      if (cfg.materialize_inverses && def->inverse_id && !st.object.is_literal()) {
        fresh.push_back({st.object, inverse ? def->id : *def->inverse_id, st.subject, st.validity});
      }
    }
    std::size_t before = out.size();
    for (Statement& st : fresh) out.insert(std::move(st));
    if (out.size() == before) return out;
  }
}

}  // namespace hdtkg::testing
