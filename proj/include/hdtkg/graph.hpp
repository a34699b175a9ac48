#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "hdtkg/term.hpp"
#include "hdtkg/time_span.hpp"

namespace hdtkg {

struct Statement {
  Term subject;
  Iri predicate;
  Term object;
  TimeSpan validity;

  friend bool operator==(const Statement&, const Statement&) = default;
  friend auto operator<=>(const Statement&, const Statement&) = default;
};

// "<s> <p> <o>" followed by the validity when it is not "always".
std::string to_string(const Statement& st);

enum class InsertOutcome { inserted, duplicate };

/// Set of statements with subject, predicate and object indexes. Two
/// statements that differ only in validity are distinct members.
class Graph {
 public:
  Graph() = default;
  explicit Graph(PrefixMap prefixes) : prefixes_(std::move(prefixes)) {}

  Graph(const Graph& other);
  Graph& operator=(const Graph& other);
  Graph(Graph&&) noexcept = default;
  Graph& operator=(Graph&&) noexcept = default;

  // Throws MalformedStatement for a literal subject.
  InsertOutcome insert(Statement st);
  InsertOutcome insert(Term subject, Iri predicate, Term object,
                       TimeSpan validity = TimeSpan::always());
  bool remove(const Statement& st);
  bool contains(const Statement& st) const { return statements_.contains(st); }

  // Sorted. `at` keeps only statements whose validity contains that instant.
  std::vector<Statement> match(const std::optional<Term>& subject,
                               const std::optional<Iri>& predicate,
                               const std::optional<Term>& object,
                               std::optional<Instant> at = std::nullopt) const;

  std::size_t size() const noexcept { return statements_.size(); }
  bool empty() const noexcept { return statements_.empty(); }
  auto begin() const { return statements_.begin(); }
  auto end() const { return statements_.end(); }
  void clear();

  const PrefixMap& prefixes() const noexcept { return prefixes_; }
  void set_prefixes(PrefixMap prefixes) { prefixes_ = std::move(prefixes); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.statements_ == b.statements_; }

 private:
  using Bucket = std::vector<const Statement*>;

  void index(const Statement* st);
  void unindex(const Statement* st);
  void rebuild_indexes();

  std::set<Statement> statements_;
  std::unordered_map<std::string, Bucket> by_subject_;
  std::unordered_map<std::string, Bucket> by_predicate_;
  std::unordered_map<std::string, Bucket> by_object_;
  PrefixMap prefixes_;
};

// Blank label -> canonical label ("b0", "b1", ...). Labels depend only on the
// graph's structure, so isomorphic graphs get identical relabelings.
std::unordered_map<std::string, std::string> canonical_blank_labels(const Graph& g);

// Copy of `g` with every blank node renamed through `labels`; labels missing
// from the map are kept.
Graph relabel_blanks(const Graph& g, const std::unordered_map<std::string, std::string>& labels);

// Equal up to a bijection on blank node labels; validity must match exactly.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace hdtkg
