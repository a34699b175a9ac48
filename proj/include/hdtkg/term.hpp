#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace hdtkg {

/// An absolute IRI. Construction validates: non-empty, a scheme followed by
/// ':', and none of the characters N-Triples forbids inside `<...>`
/// (whitespace, controls, `<>"{}|^`\`).
class Iri {
 public:
  explicit Iri(std::string value);

  static std::optional<Iri> parse(std::string_view value);
  static bool is_valid(std::string_view value);

  const std::string& str() const noexcept { return value_; }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  struct Unchecked {};
  Iri(std::string value, Unchecked) : value_(std::move(value)) {}

  std::string value_;
};

enum class TermKind : std::uint8_t { iri, blank, literal };

/// An RDF term. Terms are immutable values; equality and ordering follow the
/// canonical N-Triples spelling of the term.
class Term {
 public:
  static Term iri(Iri value);
  static Term iri(std::string_view value);
  static Term blank(std::string label);
  // A simple literal (xsd:string).
  static Term literal(std::string lexical);
  static Term literal(std::string lexical, Iri datatype);
  static Term lang_literal(std::string lexical, std::string language);

  static bool is_valid_blank_label(std::string_view label);
  static bool is_valid_language_tag(std::string_view tag);

  TermKind kind() const noexcept { return kind_; }
  bool is_iri() const noexcept { return kind_ == TermKind::iri; }
  bool is_blank() const noexcept { return kind_ == TermKind::blank; }
  bool is_literal() const noexcept { return kind_ == TermKind::literal; }

  // IRI string, blank label, or literal lexical form.
  const std::string& value() const noexcept { return value_; }
  // Throws MalformedStatement unless is_iri().
  Iri as_iri() const;
  // Datatype IRI for literals (rdf:langString for language-tagged ones).
  const std::string& datatype() const noexcept { return datatype_; }
  const std::string& language() const noexcept { return language_; }

  const std::string& canonical() const noexcept { return canonical_; }

  friend bool operator==(const Term& a, const Term& b) { return a.canonical_ == b.canonical_; }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    return a.canonical_.compare(b.canonical_) <=> 0;
  }

 private:
  Term(TermKind kind, std::string value, std::string datatype, std::string language);

  TermKind kind_;
  std::string value_;
  std::string datatype_;
  std::string language_;
  std::string canonical_;
};

/// prefix -> namespace IRI
using PrefixMap = std::map<std::string, std::string, std::less<>>;

// Escapes a literal lexical form for N-Triples / Turtle short strings.
std::string escape_literal(std::string_view lexical);

// "prefix:local" when some namespace in `prefixes` matches and the local part
// is a safe Turtle local name; otherwise std::nullopt.
std::optional<std::string> compact_iri(const PrefixMap& prefixes, std::string_view iri);

// Expands "prefix:local"; std::nullopt when the prefix is not bound.
std::optional<std::string> expand_curie(const PrefixMap& prefixes, std::string_view curie);

// Turtle-style rendering: CURIE where possible, `<iri>` otherwise, `a` is not
// used. Literals keep their datatype compacted.
std::string to_turtle(const Term& term, const PrefixMap& prefixes);
std::string to_turtle(const Iri& iri, const PrefixMap& prefixes);

}  // namespace hdtkg

template <>
struct std::hash<hdtkg::Iri> {
  std::size_t operator()(const hdtkg::Iri& iri) const noexcept {
    return std::hash<std::string>{}(iri.str());
  }
};

template <>
struct std::hash<hdtkg::Term> {
  std::size_t operator()(const hdtkg::Term& term) const noexcept {
    return std::hash<std::string>{}(term.canonical());
  }
};
