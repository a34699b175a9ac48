#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hdtkg/term.hpp"
#include "hdtkg/vocab.hpp"

namespace hdtkg {

struct Namespace {
  std::string prefix;
  Iri base_iri;
  std::string model_name;
  std::string version;
  std::string description;
  std::string class_prefix;
  std::string property_prefix;
};

class NamespaceRegistry {
 public:
  // Throws Error on a duplicate prefix or base IRI.
  void add(Namespace ns);

  const Namespace* find(std::string_view prefix) const;
  const std::vector<Namespace>& all() const noexcept { return namespaces_; }
  std::size_t size() const noexcept { return namespaces_.size(); }

  // "crm:E5" -> IRI. Throws LookupError on an unknown prefix or a missing ':'.
  Iri expand(std::string_view curie) const;
  std::optional<std::string> compact(const Iri& iri) const;

  PrefixMap prefix_map() const;

 private:
  std::vector<Namespace> namespaces_;
};

struct ClassDef {
  Iri id;
  std::string code;
  std::string label;
  std::vector<Iri> superclasses;
};

struct PropertyDef {
  Iri id;
  std::string code;
  std::string forward_label;
  std::optional<std::string> inverse_label;
  // Present exactly when inverse_label is.
  std::optional<Iri> inverse_id;
  std::optional<Iri> domain;
  std::optional<Iri> range;
  std::vector<Iri> superproperties;
};

struct ConformanceResult {
  bool domain_ok = true;
  bool range_ok = true;
  std::optional<Iri> expected_domain;
  std::optional<Iri> expected_range;

  bool conformant() const noexcept { return domain_ok && range_ok; }
};

class OntologyBuilder;

/// Immutable schema registry: namespaces, classes and properties with their
/// declared hierarchy. Subsumption answers come from a reachability matrix
/// computed once at construction.
class Ontology {
 public:
  const NamespaceRegistry& namespaces() const noexcept { return namespaces_; }
  const std::vector<ClassDef>& classes() const noexcept { return classes_; }
  const std::vector<PropertyDef>& properties() const noexcept { return properties_; }
  const std::string& hdt_base() const noexcept { return hdt_base_; }

  const ClassDef* find_class(const Iri& id) const;
  const ClassDef* find_class_by_code(std::string_view code) const;
  // Accepts the forward IRI or, for HDT properties, the minted inverse IRI.
  const PropertyDef* find_property(const Iri& id) const;
  const PropertyDef* find_property_by_code(std::string_view code) const;
  // Matches the forward or the inverse label.
  const PropertyDef* find_property_by_label(std::string_view label) const;
  bool is_inverse_property(const Iri& id) const;

  // Throwing variants (LookupError).
  const ClassDef& class_def(const Iri& id) const;
  const PropertyDef& property_def(const Iri& id) const;

  // Resolves "HC1", "crm:E5" or a full IRI string to a registered IRI.
  Iri resolve(std::string_view code_or_curie) const;

  // Reflexive-transitive closure of the declared links. Both arguments must
  // be registered (LookupError otherwise).
  bool is_subclass_of(const Iri& sub, const Iri& super) const;
  bool is_subproperty_of(const Iri& sub, const Iri& super) const;

  // Every registered class/property reachable from `id`, excluding `id`.
  std::vector<Iri> strict_superclasses(const Iri& id) const;
  std::vector<Iri> strict_superproperties(const Iri& id) const;

  // Unregistered types are ignored; an empty (or fully unregistered) type
  // set fails a declared domain or range.
  ConformanceResult check_assignment(const Iri& property, std::span<const Iri> subject_types,
                                     std::span<const Iri> object_types) const;

  // `hdt:validFrom`, `hdt:validTo` and the literal datatype of the validity
  // annotation, under this ontology's HDT base.
  Iri valid_from_iri() const;
  Iri valid_to_iri() const;
  Iri iso8601_datatype() const;

 private:
  friend class OntologyBuilder;
  Ontology() = default;

  std::size_t class_index(const Iri& id) const;
  std::size_t property_index(const Iri& id) const;

  NamespaceRegistry namespaces_;
  std::string hdt_base_;
  std::vector<ClassDef> classes_;
  std::vector<PropertyDef> properties_;
  std::unordered_map<std::string, std::size_t> class_by_iri_;
  std::unordered_map<std::string, std::size_t> class_by_code_;
  std::unordered_map<std::string, std::size_t> property_by_iri_;
  std::unordered_map<std::string, std::size_t> property_by_inverse_iri_;
  std::unordered_map<std::string, std::size_t> property_by_code_;
  std::unordered_map<std::string, std::size_t> property_by_label_;
  // reach[i][j] == true iff j is reachable from i (reflexive).
  std::vector<std::vector<bool>> class_reach_;
  std::vector<std::vector<bool>> property_reach_;
};

/// Accumulates definitions and checks them as a whole in build(): duplicate
/// codes or IRIs, dangling super links and hierarchy cycles all throw Error.
class OntologyBuilder {
 public:
  explicit OntologyBuilder(std::string hdt_base = std::string(vocab::kDefaultHdtBase));

  OntologyBuilder& add_namespace(Namespace ns);
  OntologyBuilder& add_class(ClassDef def);
  OntologyBuilder& add_property(PropertyDef def);

  const NamespaceRegistry& namespaces() const noexcept { return namespaces_; }

  Ontology build() &&;

 private:
  std::string hdt_base_;
  NamespaceRegistry namespaces_;
  std::vector<ClassDef> classes_;
  std::vector<PropertyDef> properties_;
};

// The HDT schema with the CIDOC CRM family subset it builds on. `hdt_base`
// rebinds the `hdt` namespace.
Ontology load_builtin_ontology(std::string_view hdt_base = vocab::kDefaultHdtBase);

// Shared instance under the default base, built on first use.
const Ontology& builtin_ontology();

// Prefixes a serializer or parser starts from: the ontology's namespaces plus
// rdf, rdfs, xsd, owl and the `hdtx` example namespace.
PrefixMap standard_prefixes(const Ontology& ont);
PrefixMap standard_prefixes(std::string_view hdt_base = vocab::kDefaultHdtBase);

}  // namespace hdtkg
