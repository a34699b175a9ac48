#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hdtkg/errors.hpp"
#include "hdtkg/graph.hpp"
#include "hdtkg/ontology.hpp"

namespace hdtkg {

// Rule ids, in report order:
//   V1  domain/range conformance
//   V2  at most one digital twin per heritage entity (none: warning)
//   V3  tangible aspects carry an intangible aspect
//   V4  no cycles through hdt:HP3
//   V5  vocabulary outside the registry, untyped participants
//   V6  well-formed ISO 8601 validity and time-span literals
const std::vector<std::string>& validation_rule_ids();
// Throws LookupError for an unknown id.
std::string_view rule_summary(std::string_view rule_id);

enum class RuleLevel { error, warning, off };

struct ValidationConfig {
  std::map<std::string, RuleLevel, std::less<>> levels;
  // Take node types from the closure (all rules, domain/range typing
  // included) instead of the asserted rdf:type statements.
  bool types_from_closure = false;
  // Report every warning as an error.
  bool strict = false;

  static ValidationConfig defaults();

  RuleLevel level(std::string_view rule_id) const;
  // Throws LookupError for an unknown id.
  void set_level(std::string_view rule_id, RuleLevel level);
  // Every warning-level rule becomes an error; "off" stays off.
  void promote_warnings();
};

// "V2=off,V5=error". Throws ParseError or LookupError.
void apply_severity_overrides(ValidationConfig& cfg, std::string_view overrides);

struct Violation {
  std::string rule_id;
  Severity severity = Severity::error;
  std::optional<Statement> statement;
  std::optional<Term> node;
  std::string message;
  std::string expected;
  std::string actual;
  // V4 only: the cycle, starting and ending at the same node.
  std::vector<Term> cycle;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct RuleStats {
  std::size_t errors = 0;
  std::size_t warnings = 0;

  friend bool operator==(const RuleStats&, const RuleStats&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::map<std::string, RuleStats> stats;

  std::size_t error_count() const;
  std::size_t warning_count() const;
  bool has_errors() const { return error_count() > 0; }
  std::size_t count(std::string_view rule_id, std::optional<Severity> severity = std::nullopt) const;
};

ValidationReport validate(const Graph& g, const Ontology& ont,
                          const ValidationConfig& cfg = ValidationConfig::defaults());

// Readable account of the violation, quoting the declaration or rule it
// breaks. Throws LookupError for an unknown rule id.
std::string explain(const Violation& v, const Ontology& ont);

std::string format_report_text(const ValidationReport& report, const Ontology& ont);
std::string format_report_json(const ValidationReport& report, const Ontology& ont);

}  // namespace hdtkg
