#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hdtkg/graph.hpp"

namespace hdtkg {

struct Variable {
  std::string name;  // without the leading '?'

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Forward traversal of each step in turn: a/b/c.
struct PropertyPath {
  std::vector<Iri> steps;

  friend bool operator==(const PropertyPath&, const PropertyPath&) = default;
};

using PatternTerm = std::variant<Term, Variable>;
using PatternPredicate = std::variant<PropertyPath, Variable>;

struct TriplePattern {
  PatternTerm subject;
  PatternPredicate predicate;
  PatternTerm object;
};

struct Pattern {
  std::vector<TriplePattern> triples;
  std::optional<Instant> at;
};

using Binding = std::map<std::string, Term>;

// Variables in order of first appearance.
std::vector<std::string> variables(const Pattern& pattern);

/// Every binding of the pattern's variables under which each triple matches
/// (a path triple matches when the object is reachable from the subject).
/// Deduplicated and sorted by the bound terms. Throws Error for a pattern
/// with no triples or an empty path.
std::vector<Binding> solve(const Graph& g, const Pattern& pattern);

// Terms reachable from `start` by following the steps in order.
std::set<Term> path(const Graph& g, const Term& start, const PropertyPath& p,
                    std::optional<Instant> at = std::nullopt);

/// Text form: triples separated by '.', each `subject predicate object`.
/// Terms are `?var`, `<iri>`, CURIEs, `_:label`, quoted literals (with
/// @lang or ^^datatype) or integers; the predicate may be `a` or a path
/// `p1/p2/...`. A final `@<date>` sets the instant. Throws ParseError.
Pattern parse_query(std::string_view text, const PrefixMap& prefixes);

// Tab-separated: a header of variable names, then one row per binding.
std::string format_bindings(const std::vector<Binding>& rows, const std::vector<std::string>& vars,
                            const PrefixMap& prefixes);

}  // namespace hdtkg
