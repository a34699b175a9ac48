#include "hdtkg/ontology.hpp"

#include <algorithm>

#include "hdtkg/errors.hpp"

namespace hdtkg {

// ---------------------------------------------------------------------------
// NamespaceRegistry

void NamespaceRegistry::add(Namespace ns) {
  for (const auto& existing : namespaces_) {
    if (existing.prefix == ns.prefix) throw Error("duplicate namespace prefix '" + ns.prefix + "'");
    if (existing.base_iri == ns.base_iri) {
      throw Error("duplicate namespace IRI '" + ns.base_iri.str() + "'");
    }
  }
  namespaces_.push_back(std::move(ns));
}

const Namespace* NamespaceRegistry::find(std::string_view prefix) const {
  for (const auto& ns : namespaces_) {
    if (ns.prefix == prefix) return &ns;
  }
  return nullptr;
}

Iri NamespaceRegistry::expand(std::string_view curie) const {
  auto colon = curie.find(':');
  if (colon == std::string_view::npos) throw LookupError("'" + std::string(curie) + "' is not a CURIE");
  const Namespace* ns = find(curie.substr(0, colon));
  if (ns == nullptr) {
    throw LookupError("unknown prefix '" + std::string(curie.substr(0, colon)) + "'");
  }
  return Iri(ns->base_iri.str() + std::string(curie.substr(colon + 1)));
}

std::optional<std::string> NamespaceRegistry::compact(const Iri& iri) const {
  return compact_iri(prefix_map(), iri.str());
}

PrefixMap NamespaceRegistry::prefix_map() const {
  PrefixMap map;
  for (const auto& ns : namespaces_) map.emplace(ns.prefix, ns.base_iri.str());
  return map;
}

// ---------------------------------------------------------------------------
// Ontology queries

const ClassDef* Ontology::find_class(const Iri& id) const {
  auto it = class_by_iri_.find(id.str());
  return it == class_by_iri_.end() ? nullptr : &classes_[it->second];
}

const ClassDef* Ontology::find_class_by_code(std::string_view code) const {
  auto it = class_by_code_.find(std::string(code));
  return it == class_by_code_.end() ? nullptr : &classes_[it->second];
}

const PropertyDef* Ontology::find_property(const Iri& id) const {
  if (auto it = property_by_iri_.find(id.str()); it != property_by_iri_.end()) {
    return &properties_[it->second];
  }
  if (auto it = property_by_inverse_iri_.find(id.str()); it != property_by_inverse_iri_.end()) {
    return &properties_[it->second];
  }
  return nullptr;
}

const PropertyDef* Ontology::find_property_by_code(std::string_view code) const {
  auto it = property_by_code_.find(std::string(code));
  return it == property_by_code_.end() ? nullptr : &properties_[it->second];
}

const PropertyDef* Ontology::find_property_by_label(std::string_view label) const {
  auto it = property_by_label_.find(std::string(label));
  return it == property_by_label_.end() ? nullptr : &properties_[it->second];
}

bool Ontology::is_inverse_property(const Iri& id) const {
  return property_by_inverse_iri_.contains(id.str());
}

const ClassDef& Ontology::class_def(const Iri& id) const {
  if (const ClassDef* def = find_class(id)) return *def;
  throw LookupError("unknown class <" + id.str() + ">");
}

const PropertyDef& Ontology::property_def(const Iri& id) const {
  if (const PropertyDef* def = find_property(id)) return *def;
  throw LookupError("unknown property <" + id.str() + ">");
}

Iri Ontology::resolve(std::string_view key) const {
  if (const ClassDef* c = find_class_by_code(key)) return c->id;
  if (const PropertyDef* p = find_property_by_code(key)) return p->id;
  auto colon = key.find(':');
  if (colon != std::string_view::npos) {
    if (namespaces_.find(key.substr(0, colon)) != nullptr) {
      Iri iri = namespaces_.expand(key);
      if (find_class(iri) || find_property(iri)) return iri;
      throw LookupError("'" + std::string(key) + "' is not registered");
    }
    if (auto iri = Iri::parse(key); iri && (find_class(*iri) || find_property(*iri))) return *iri;
  }
  throw LookupError("cannot resolve '" + std::string(key) + "'");
}

std::size_t Ontology::class_index(const Iri& id) const {
  auto it = class_by_iri_.find(id.str());
  if (it == class_by_iri_.end()) throw LookupError("unknown class <" + id.str() + ">");
  return it->second;
}

std::size_t Ontology::property_index(const Iri& id) const {
  auto it = property_by_iri_.find(id.str());
  if (it == property_by_iri_.end()) throw LookupError("unknown property <" + id.str() + ">");
  return it->second;
}

bool Ontology::is_subclass_of(const Iri& sub, const Iri& super) const {
  return class_reach_[class_index(sub)][class_index(super)];
}

bool Ontology::is_subproperty_of(const Iri& sub, const Iri& super) const {
  const bool sub_inverse = is_inverse_property(sub);
  const bool super_inverse = is_inverse_property(super);
  if (!sub_inverse && !super_inverse) {
    return property_reach_[property_index(sub)][property_index(super)];
  }
  const PropertyDef& p = property_def(sub);
  const PropertyDef& q = property_def(super);
  if (sub_inverse != super_inverse) return false;
  // p⁻ ⊑ q⁻ exactly when p ⊑ q.
  return property_reach_[property_index(p.id)][property_index(q.id)];
}

std::vector<Iri> Ontology::strict_superclasses(const Iri& id) const {
  const std::size_t i = class_index(id);
  std::vector<Iri> out;
  for (std::size_t j = 0; j < classes_.size(); ++j) {
    if (j != i && class_reach_[i][j]) out.push_back(classes_[j].id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Iri> Ontology::strict_superproperties(const Iri& id) const {
  std::vector<Iri> out;
  if (is_inverse_property(id)) {
    const std::size_t i = property_index(property_def(id).id);
    for (std::size_t j = 0; j < properties_.size(); ++j) {
      if (j != i && property_reach_[i][j] && properties_[j].inverse_id) {
        out.push_back(*properties_[j].inverse_id);
      }
    }
  } else {
    const std::size_t i = property_index(id);
    for (std::size_t j = 0; j < properties_.size(); ++j) {
      if (j != i && property_reach_[i][j]) out.push_back(properties_[j].id);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConformanceResult Ontology::check_assignment(const Iri& property,
                                             std::span<const Iri> subject_types,
                                             std::span<const Iri> object_types) const {
  const PropertyDef& def = property_def(property);
  ConformanceResult result;
  if (is_inverse_property(property)) {
    result.expected_domain = def.range;
    result.expected_range = def.domain;
  } else {
    result.expected_domain = def.domain;
    result.expected_range = def.range;
  }
  auto satisfies = [this](std::span<const Iri> types, const Iri& required) {
    return std::any_of(types.begin(), types.end(), [&](const Iri& t) {
      return find_class(t) != nullptr && is_subclass_of(t, required);
    });
  };
  if (result.expected_domain) result.domain_ok = satisfies(subject_types, *result.expected_domain);
  if (result.expected_range) result.range_ok = satisfies(object_types, *result.expected_range);
  return result;
}

Iri Ontology::valid_from_iri() const { return Iri(hdt_base_ + std::string(vocab::kValidFromLocal)); }
Iri Ontology::valid_to_iri() const { return Iri(hdt_base_ + std::string(vocab::kValidToLocal)); }
Iri Ontology::iso8601_datatype() const { return Iri(hdt_base_ + std::string(vocab::kIso8601Local)); }

// ---------------------------------------------------------------------------
// OntologyBuilder

namespace {

// reach[i][j]: j reachable from i over `edges`, reflexive. Throws on a cycle.
std::vector<std::vector<bool>> reachability(const std::vector<std::vector<std::size_t>>& edges,
                                            const std::vector<std::string>& names,
                                            const char* what) {
  const std::size_t n = edges.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> stack{start};
    reach[start][start] = true;
    while (!stack.empty()) {
      std::size_t node = stack.back();
      stack.pop_back();
      for (std::size_t next : edges[node]) {
        if (next == start) {
          throw Error(std::string("cyclic ") + what + " hierarchy through " + names[start]);
        }
        if (!reach[start][next]) {
          reach[start][next] = true;
          stack.push_back(next);
        }
      }
    }
  }
  return reach;
}

}  // namespace

OntologyBuilder::OntologyBuilder(std::string hdt_base) : hdt_base_(std::move(hdt_base)) {
  if (!Iri::is_valid(hdt_base_)) throw Error("invalid HDT base IRI '" + hdt_base_ + "'");
}

OntologyBuilder& OntologyBuilder::add_namespace(Namespace ns) {
  namespaces_.add(std::move(ns));
  return *this;
}

OntologyBuilder& OntologyBuilder::add_class(ClassDef def) {
  classes_.push_back(std::move(def));
  return *this;
}

OntologyBuilder& OntologyBuilder::add_property(PropertyDef def) {
  properties_.push_back(std::move(def));
  return *this;
}

Ontology OntologyBuilder::build() && {
  Ontology ont;
  ont.namespaces_ = std::move(namespaces_);
  ont.hdt_base_ = std::move(hdt_base_);
  ont.classes_ = std::move(classes_);
  ont.properties_ = std::move(properties_);

  for (std::size_t i = 0; i < ont.classes_.size(); ++i) {
    const ClassDef& c = ont.classes_[i];
    if (!ont.class_by_iri_.emplace(c.id.str(), i).second) {
      throw Error("duplicate class IRI <" + c.id.str() + ">");
    }
    if (!ont.class_by_code_.emplace(c.code, i).second) throw Error("duplicate class code " + c.code);
  }

  auto register_label = [&ont](const std::string& label, std::size_t i) {
    if (!ont.property_by_label_.emplace(label, i).second) {
      throw Error("duplicate property label '" + label + "'");
    }
  };
  for (std::size_t i = 0; i < ont.properties_.size(); ++i) {
    const PropertyDef& p = ont.properties_[i];
    if (ont.class_by_iri_.contains(p.id.str()) || !ont.property_by_iri_.emplace(p.id.str(), i).second) {
      throw Error("duplicate property IRI <" + p.id.str() + ">");
    }
    if (ont.class_by_code_.contains(p.code) || !ont.property_by_code_.emplace(p.code, i).second) {
      throw Error("duplicate property code " + p.code);
    }
    register_label(p.forward_label, i);
    if (p.inverse_label.has_value() != p.inverse_id.has_value()) {
      throw Error("property " + p.code + " must declare both an inverse label and an inverse IRI");
    }
    if (p.inverse_label) register_label(*p.inverse_label, i);
  }
  for (std::size_t i = 0; i < ont.properties_.size(); ++i) {
    const PropertyDef& p = ont.properties_[i];
    if (p.inverse_id) {
      const std::string& inv = p.inverse_id->str();
      if (ont.property_by_iri_.contains(inv) || ont.class_by_iri_.contains(inv) ||
          !ont.property_by_inverse_iri_.emplace(inv, i).second) {
        throw Error("inverse IRI <" + inv + "> of " + p.code + " collides with another definition");
      }
    }
  }

  std::vector<std::vector<std::size_t>> class_edges(ont.classes_.size());
  std::vector<std::string> class_names;
  for (std::size_t i = 0; i < ont.classes_.size(); ++i) {
    class_names.push_back(ont.classes_[i].code);
    for (const Iri& super : ont.classes_[i].superclasses) {
      auto it = ont.class_by_iri_.find(super.str());
      if (it == ont.class_by_iri_.end()) {
        throw Error("class " + ont.classes_[i].code + " has unregistered superclass <" + super.str() + ">");
      }
      class_edges[i].push_back(it->second);
    }
  }
  ont.class_reach_ = reachability(class_edges, class_names, "class");

  std::vector<std::vector<std::size_t>> property_edges(ont.properties_.size());
  std::vector<std::string> property_names;
  for (std::size_t i = 0; i < ont.properties_.size(); ++i) {
    const PropertyDef& p = ont.properties_[i];
    property_names.push_back(p.code);
    for (const Iri& super : p.superproperties) {
      auto it = ont.property_by_iri_.find(super.str());
      if (it == ont.property_by_iri_.end()) {
        throw Error("property " + p.code + " has unregistered superproperty <" + super.str() + ">");
      }
      property_edges[i].push_back(it->second);
    }
    for (const auto* end : {&p.domain, &p.range}) {
      if (*end && !ont.class_by_iri_.contains((*end)->str())) {
        throw Error("property " + p.code + " refers to unregistered class <" + (*end)->str() + ">");
      }
    }
  }
  ont.property_reach_ = reachability(property_edges, property_names, "property");
  return ont;
}

// ---------------------------------------------------------------------------
// Builtin registry

namespace {

struct NamespaceRow {
  const char* prefix;
  const char* base;
  const char* model;
  const char* version;
  const char* description;
  const char* class_prefix;
  const char* property_prefix;
};

// The hdt row's base is substituted at load time.
constexpr NamespaceRow kNamespaces[] = {
    {"hdt", "", "HDT", "1.0", "Heritage Digital Twin ontology (new classes and properties)", "HC", "HP"},
    {"crm", "http://www.cidoc-crm.org/cidoc-crm/", "CIDOC CRM", "6.2.1",
     "A formal ontology for modelling Cultural Heritage information", "E", "P"},
    {"crmsci", "http://www.ics.forth.gr/isl/CRMsci/", "CRMsci", "1.2.6",
     "The scientific observation model", "S", "O"},
    {"crmdig", "http://www.ics.forth.gr/isl/CRMdig/", "CRMdig", "3.2",
     "Model for provenance metadata", "D", "L"},
    {"crmpe", "http://parthenos.d4science.org/CRMext/CRMpe.rdfs/", "CRMpe", "3.1.2",
     "The PARTHENOS Entities model", "PE", "PP"},
    {"crminf", "http://www.ics.forth.gr/isl/CRMinf/", "CRMinf", "0.10.1",
     "An Extension of CIDOC-CRM to support argumentation", "I", "J"},
    {"crmba", "http://www.ics.forth.gr/isl/CRMba/", "CRMba", "1.4",
     "An extension of CIDOC CRM to support buildings archaeology documentation", "B", "BP"},
    {"frbr", "http://iflastandards.info/ns/fr/frbr/frbroo/", "FRBRoo", "2.4",
     "Functional requirements for bibliographic records", "F", "R"},
    {"nont", "https://dlnarratives.eu/ontology#", "NOnt", "1.0", "The MINGEI Narrative Ontology", "", ""},
};

struct ClassRow {
  const char* prefix;
  const char* code;
  const char* label;
  std::vector<const char*> supers;  // CURIEs
};

struct PropertyRow {
  const char* prefix;
  const char* code;
  const char* forward;
  const char* inverse;  // nullptr when not declared
  const char* domain;   // CURIE or nullptr
  const char* range;
  std::vector<const char*> supers;
};

const std::vector<ClassRow>& class_rows() {
  static const std::vector<ClassRow> rows = {
      {"hdt", "HC1", "Heritage Entity", {"crm:E77"}},
      {"hdt", "HC2", "Heritage Digital Twin", {"crm:E89"}},
      {"hdt", "HC3", "Tangible Aspect", {"hdt:HC1", "crm:E18"}},
      {"hdt", "HC4", "Intangible Aspect", {"hdt:HC1", "crm:E89"}},
      {"hdt", "HC5", "Digital Representation", {"crmdig:D1"}},
      {"hdt", "HC6", "Digital Heritage Document", {"hdt:HC5"}},
      {"hdt", "HC7", "Digital Visual Object", {"hdt:HC5"}},
      {"hdt", "HC8", "3D Model", {"hdt:HC5"}},

      {"crm", "E3", "Condition State", {}},
      {"crm", "E5", "Event", {}},
      {"crm", "E7", "Activity", {}},
      {"crm", "E12", "Production", {}},
      {"crm", "E14", "Condition Assessment", {}},
      {"crm", "E18", "Physical Thing", {}},
      {"crm", "E19", "Physical Object", {}},
      {"crm", "E26", "Physical Feature", {}},
      {"crm", "E31", "Document", {}},
      {"crm", "E34", "Inscription", {}},
      {"crm", "E36", "Visual Item", {}},
      {"crm", "E39", "Actor", {}},
      {"crm", "E52", "Time-Span", {}},
      {"crm", "E53", "Place", {}},
      {"crm", "E55", "Type", {}},
      {"crm", "E73", "Information Object", {}},
      {"crm", "E74", "Group", {}},
      {"crm", "E77", "Persistent Item", {}},
      {"crm", "E89", "Propositional Object", {}},

      {"crmdig", "D1", "Digital Object", {}},
      {"crmdig", "D2", "Digitization Process", {}},
      {"crmdig", "D8", "Digital Device", {}},
      {"crmdig", "D9", "Data Object", {}},
      {"crmdig", "D11", "Digital Measurement Event", {}},
      {"crmdig", "D14", "Software", {}},

      {"crmsci", "S6", "Data Evaluation", {}},
      {"crmsci", "S9", "Property Type", {}},
      {"crmsci", "S20", "Rigid Physical Feature", {}},

      {"crminf", "I2", "Belief", {}},
      {"crminf", "I5", "Inference Making", {}},
      {"crminf", "I7", "Belief Adoption", {}},

      {"crmba", "B1", "Built Work", {}},
      {"crmba", "B2", "Morphological Building Section", {}},

      {"frbr", "F14", "Individual Work", {}},

      {"nont", "Narrative", "Narrative", {"crm:E73"}},
      {"nont", "Narration", "Narration", {"frbr:F14"}},
  };
  return rows;
}

const std::vector<PropertyRow>& property_rows() {
  static const std::vector<PropertyRow> rows = {
      {"hdt", "HP1", "has digital twin", "is digital twin of", "hdt:HC1", "hdt:HC2", {}},
      {"hdt", "HP2", "has story", "is story about", "hdt:HC1", "nont:Narrative", {}},
      {"hdt", "HP3", "is digital twin component of", "has digital twin component", "hdt:HC2", "hdt:HC2", {}},
      {"hdt", "HP4", "narrates", "is narrated through", "nont:Narration", "nont:Narrative", {}},
      {"hdt", "HP5", "has intangible aspect", "is intangible aspect of", "hdt:HC3", "hdt:HC4", {}},
      {"hdt", "HP6", "has manifestation event", "event is manifestation of", "hdt:HC4", "crm:E5", {"crm:P129"}},
      {"hdt", "HP7", "is manifestation of", "is manifested by", "hdt:HC3", "hdt:HC4", {}},
      {"hdt", "HP8", "is narrated in document", "document used for narration", "nont:Narration", "crm:E31", {}},
      {"hdt", "HP9", "has visual representation", "is visual representation of", "hdt:HC1", "hdt:HC7", {}},
      {"hdt", "HP10", "tells about", "is told by", "nont:Narrative", "crm:E5", {}},

      {"crm", "P2", "has type", nullptr, nullptr, nullptr, {}},
      {"crm", "P4", "has time-span", nullptr, nullptr, nullptr, {}},
      {"crm", "P7", "took place at", nullptr, nullptr, nullptr, {}},
      {"crm", "P14", "carried out by", nullptr, nullptr, nullptr, {}},
      {"crm", "P16", "used specific object", nullptr, nullptr, nullptr, {}},
      {"crm", "P17", "was motivated by", nullptr, nullptr, nullptr, {}},
      {"crm", "P39", "measured", nullptr, nullptr, nullptr, {}},
      {"crm", "P44", "has condition", nullptr, nullptr, nullptr, {}},
      {"crm", "P46", "is composed of", nullptr, nullptr, nullptr, {}},
      {"crm", "P56", "bears feature", nullptr, nullptr, nullptr, {}},
      {"crm", "P70", "documents", nullptr, nullptr, nullptr, {}},
      {"crm", "P82", "at some time within", nullptr, nullptr, nullptr, {}},
      {"crm", "P108", "has produced", nullptr, nullptr, nullptr, {}},
      {"crm", "P128", "carries", nullptr, nullptr, nullptr, {}},
      {"crm", "P129", "is about", nullptr, nullptr, nullptr, {}},
      {"crm", "P138", "represents", nullptr, nullptr, nullptr, {}},
      {"crm", "P148", "has component", nullptr, nullptr, nullptr, {}},

      {"crmdig", "L1", "digitized", nullptr, nullptr, nullptr, {}},
      {"crmdig", "L10", "had input", nullptr, nullptr, nullptr, {}},
      {"crmdig", "L11", "had output", nullptr, nullptr, nullptr, {}},
      {"crmdig", "L12", "happened on device", nullptr, nullptr, nullptr, {}},
      {"crmdig", "L20", "has created", nullptr, nullptr, nullptr, {}},
      {"crmdig", "L23", "used software or firmware", nullptr, nullptr, nullptr, {}},

      {"crmsci", "O8", "observed", nullptr, nullptr, nullptr, {}},
      {"crmsci", "O9", "observed property type", nullptr, nullptr, nullptr, {}},
      {"crmsci", "O11", "described", nullptr, nullptr, nullptr, {}},
      {"crmsci", "O16", "observed value", nullptr, nullptr, nullptr, {}},

      {"crminf", "J1", "used as premise", nullptr, nullptr, nullptr, {}},
      {"crminf", "J2", "concluded that", nullptr, nullptr, nullptr, {}},
      {"crminf", "J7", "is based on evidence from", nullptr, nullptr, nullptr, {}},

      {"crmba", "BP1", "has morphological building section", nullptr, nullptr, nullptr, {}},

      {"nont", "hasNarration", "has narration", nullptr, nullptr, nullptr, {}},
  };
  return rows;
}

}  // namespace

Ontology load_builtin_ontology(std::string_view hdt_base) {
  OntologyBuilder builder{std::string(hdt_base)};
  for (const NamespaceRow& row : kNamespaces) {
    std::string base = std::string_view(row.prefix) == "hdt" ? std::string(hdt_base) : row.base;
    builder.add_namespace(Namespace{row.prefix, Iri(base), row.model, row.version, row.description,
                                    row.class_prefix, row.property_prefix});
  }
  const NamespaceRegistry& ns = builder.namespaces();
  auto expand_local = [&ns](const char* prefix, const char* code) {
    return ns.expand(std::string(prefix) + ":" + code);
  };

  for (const ClassRow& row : class_rows()) {
    ClassDef def{expand_local(row.prefix, row.code), row.code, row.label, {}};
    for (const char* super : row.supers) def.superclasses.push_back(ns.expand(super));
    builder.add_class(std::move(def));
  }
  for (const PropertyRow& row : property_rows()) {
    PropertyDef def{expand_local(row.prefix, row.code), row.code, row.forward, {}, {}, {}, {}, {}};
    if (row.inverse != nullptr) {
      def.inverse_label = row.inverse;
      def.inverse_id = Iri(std::string(hdt_base) + row.code + std::string(vocab::kInverseSuffix));
    }
    if (row.domain != nullptr) def.domain = ns.expand(row.domain);
    if (row.range != nullptr) def.range = ns.expand(row.range);
    for (const char* super : row.supers) def.superproperties.push_back(ns.expand(super));
    builder.add_property(std::move(def));
  }
  return std::move(builder).build();
}

const Ontology& builtin_ontology() {
  static const Ontology instance = load_builtin_ontology();
  return instance;
}

PrefixMap standard_prefixes(const Ontology& ont) {
  PrefixMap map = ont.namespaces().prefix_map();
  map.emplace("rdf", std::string(vocab::kRdf));
  map.emplace("rdfs", std::string(vocab::kRdfs));
  map.emplace("xsd", std::string(vocab::kXsd));
  map.emplace("owl", std::string(vocab::kOwl));
  map.emplace("hdtx", std::string(vocab::kCorpusBase));
  return map;
}

PrefixMap standard_prefixes(std::string_view hdt_base) {
  PrefixMap map;
  for (const NamespaceRow& row : kNamespaces) {
    map.emplace(row.prefix, std::string_view(row.prefix) == "hdt" ? std::string(hdt_base) : row.base);
  }
  map.emplace("rdf", std::string(vocab::kRdf));
  map.emplace("rdfs", std::string(vocab::kRdfs));
  map.emplace("xsd", std::string(vocab::kXsd));
  map.emplace("owl", std::string(vocab::kOwl));
  map.emplace("hdtx", std::string(vocab::kCorpusBase));
  return map;
}

}  // namespace hdtkg
