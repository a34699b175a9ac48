#include "hdtkg/query.hpp"

#include <algorithm>

#include "hdtkg/errors.hpp"
#include "hdtkg/vocab.hpp"

namespace hdtkg {

namespace {

std::optional<Term> resolve(const PatternTerm& t, const Binding& b) {
  if (const Term* term = std::get_if<Term>(&t)) return *term;
  auto it = b.find(std::get<Variable>(t).name);
  if (it == b.end()) return std::nullopt;
  return it->second;
}

// Binds `t` to `value` in `b`; false when it is bound to something else.
bool unify(const PatternTerm& t, const Term& value, Binding& b) {
  if (const Term* term = std::get_if<Term>(&t)) return *term == value;
  auto [it, inserted] = b.emplace(std::get<Variable>(t).name, value);
  return inserted || it->second == value;
}

std::set<Term> reverse_path(const Graph& g, const Term& end, const PropertyPath& p, std::optional<Instant> at) {
  std::set<Term> frontier{end};
  for (auto step = p.steps.rbegin(); step != p.steps.rend(); ++step) {
    std::set<Term> next;
    for (const Term& t : frontier) {
      for (const Statement& st : g.match(std::nullopt, *step, t, at)) next.insert(st.subject);
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return frontier;
}

class Solver {
 public:
  Solver(const Graph& g, const Pattern& p) : g_(g), p_(p) {}

  std::vector<Binding> run() {
    std::vector<bool> done(p_.triples.size(), false);
    step(done, p_.triples.size(), Binding{});
    return {results_.begin(), results_.end()};
  }

 private:
  int boundness(const TriplePattern& t, const Binding& b) const {
    int score = 0;
    if (resolve(t.subject, b)) score += 2;
    if (resolve(t.object, b)) score += 2;
    if (const auto* v = std::get_if<Variable>(&t.predicate)) {
      if (b.contains(v->name)) score += 1;
    } else {
      score += 1;
    }
    return score;
  }

  void step(std::vector<bool>& done, std::size_t remaining, const Binding& b) {
    if (remaining == 0) {
      results_.insert(b);
      return;
    }
    std::size_t pick = 0;
    int best = -1;
    for (std::size_t i = 0; i < p_.triples.size(); ++i) {
      if (done[i]) continue;
      int score = boundness(p_.triples[i], b);
      if (score > best) {
        best = score;
        pick = i;
      }
    }
    done[pick] = true;
    for (const Binding& next : extend(p_.triples[pick], b)) step(done, remaining - 1, next);
    done[pick] = false;
  }

  std::vector<Binding> extend(const TriplePattern& t, const Binding& b) const {
    std::vector<Binding> out;
    std::optional<Term> s = resolve(t.subject, b);
    std::optional<Term> o = resolve(t.object, b);

    const PropertyPath* path_pred = std::get_if<PropertyPath>(&t.predicate);
    std::optional<Iri> single;
    if (path_pred != nullptr && path_pred->steps.size() == 1) {
      single = path_pred->steps.front();
    } else if (const auto* v = std::get_if<Variable>(&t.predicate)) {
      if (auto it = b.find(v->name); it != b.end()) {
        if (!it->second.is_iri()) return out;
        single = it->second.as_iri();
      }
    }

    if (single || std::holds_alternative<Variable>(t.predicate)) {
      for (const Statement& st : g_.match(s, single, o, p_.at)) {
        Binding nb = b;
        if (!unify(t.subject, st.subject, nb) || !unify(t.object, st.object, nb)) continue;
        if (const auto* v = std::get_if<Variable>(&t.predicate)) {
          if (!unify(*v, Term::iri(st.predicate), nb)) continue;
        }
        out.push_back(std::move(nb));
      }
      return out;
    }

    auto emit = [&](const Term& from, const Term& to) {
      Binding nb = b;
      if (unify(t.subject, from, nb) && unify(t.object, to, nb)) out.push_back(std::move(nb));
    };
    if (s) {
      for (const Term& end : path(g_, *s, *path_pred, p_.at)) emit(*s, end);
    } else if (o) {
      for (const Term& start : reverse_path(g_, *o, *path_pred, p_.at)) emit(start, *o);
    } else {
      std::set<Term> starts;
      for (const Statement& st : g_.match(std::nullopt, path_pred->steps.front(), std::nullopt, p_.at)) {
        starts.insert(st.subject);
      }
      for (const Term& start : starts) {
        for (const Term& end : path(g_, start, *path_pred, p_.at)) emit(start, end);
      }
    }
    return out;
  }

  const Graph& g_;
  const Pattern& p_;
  std::set<Binding> results_;
};

}  // namespace

std::vector<std::string> variables(const Pattern& pattern) {
  std::vector<std::string> out;
  auto note = [&out](const std::string& name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  };
  for (const TriplePattern& t : pattern.triples) {
    if (const auto* v = std::get_if<Variable>(&t.subject)) note(v->name);
    if (const auto* v = std::get_if<Variable>(&t.predicate)) note(v->name);
    if (const auto* v = std::get_if<Variable>(&t.object)) note(v->name);
  }
  return out;
}

std::vector<Binding> solve(const Graph& g, const Pattern& pattern) {
  if (pattern.triples.empty()) throw Error("a pattern needs at least one triple");
  for (const TriplePattern& t : pattern.triples) {
    if (const auto* p = std::get_if<PropertyPath>(&t.predicate); p && p->steps.empty()) {
      throw Error("a property path needs at least one step");
    }
  }
  return Solver(g, pattern).run();
}

std::set<Term> path(const Graph& g, const Term& start, const PropertyPath& p, std::optional<Instant> at) {
  std::set<Term> frontier{start};
  for (const Iri& step : p.steps) {
    std::set<Term> next;
    for (const Term& t : frontier) {
      if (t.is_literal()) continue;
      for (const Statement& st : g.match(t, step, std::nullopt, at)) next.insert(st.object);
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return frontier;
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_word(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

class QueryParser {
 public:
  QueryParser(std::string_view text, const PrefixMap& prefixes) : text_(text), prefixes_(prefixes) {}

  Pattern run() {
    Pattern pattern;
    skip_ws();
    while (!at_end() && peek() != '@') {
      TriplePattern t{term(false), predicate(), term(true)};
      pattern.triples.push_back(std::move(t));
      skip_ws();
      if (peek() == '.') {
        ++pos_;
        skip_ws();
      } else if (!at_end() && peek() != '@') {
        fail("expected '.' between triple patterns");
      }
    }
    if (!at_end()) {
      std::size_t start = ++pos_;
      while (!at_end() && !is_space(peek())) ++pos_;
      std::string_view date = text_.substr(start, pos_ - start);
      try {
        pattern.at = parse_instant(date);
      } catch (const ParseError& e) {
        throw ParseError("bad instant: " + e.detail(), start + std::min(e.offset(), date.size()));
      }
      skip_ws();
      if (!at_end()) fail("unexpected text after the instant");
    }
    if (pattern.triples.empty()) fail("expected at least one triple pattern");
    return pattern;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    throw ParseError(message, offset);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
  void skip_ws() {
    while (!at_end() && is_space(peek())) ++pos_;
  }

  PatternTerm term(bool object_position) {
    skip_ws();
    if (at_end()) fail(object_position ? "expected an object" : "expected a subject");
    char c = peek();
    if (c == '?' || c == '$') return variable();
    if (c == '<') return Term::iri(iri_ref());
    if (c == '_' && peek(1) == ':') {
      std::size_t start = pos_;
      pos_ += 2;
      std::string label;
      while (!at_end() && (is_word(peek()) || peek() == '-')) label += text_[pos_++];
      if (!Term::is_valid_blank_label(label)) fail_at(start, "malformed blank node label");
      return Term::blank(label);
    }
    if (c == '"') {
      if (!object_position) fail("a literal cannot be a subject");
      return literal();
    }
    if ((c >= '0' && c <= '9') || c == '-' || c == '+') {
      if (!object_position) fail("a literal cannot be a subject");
      std::size_t start = pos_;
      if (c == '-' || c == '+') ++pos_;
      while (!at_end() && peek() >= '0' && peek() <= '9') ++pos_;
      if (pos_ == start + (c == '-' || c == '+' ? 1 : 0)) fail_at(start, "malformed number");
      return Term::literal(std::string(text_.substr(start, pos_ - start)), Iri(std::string(vocab::kXsdInteger)));
    }
    return Term::iri(curie());
  }

  PatternPredicate predicate() {
    skip_ws();
    if (at_end()) fail("expected a predicate");
    if (peek() == '?' || peek() == '$') return variable();
    PropertyPath p;
    while (true) {
      if (peek() == 'a' && (is_space(peek(1)) || peek(1) == '/' || peek(1) == '\0')) {
        ++pos_;
        p.steps.emplace_back(std::string(vocab::kRdfType));
      } else if (peek() == '<') {
        p.steps.push_back(iri_ref());
      } else {
        p.steps.push_back(curie());
      }
      if (peek() != '/') break;
      ++pos_;
    }
    return p;
  }

  Variable variable() {
    std::size_t start = pos_++;
    std::string name;
    while (!at_end() && is_word(peek())) name += text_[pos_++];
    if (name.empty()) fail_at(start, "empty variable name");
    return Variable{name};
  }

  Iri iri_ref() {
    std::size_t start = pos_++;
    std::size_t close = text_.find('>', pos_);
    if (close == std::string_view::npos) fail_at(start, "unterminated IRI");
    std::string value(text_.substr(pos_, close - pos_));
    pos_ = close + 1;
    auto iri = Iri::parse(value);
    if (!iri) fail_at(start, "invalid IRI <" + value + ">");
    return *iri;
  }

  Iri curie() {
    std::size_t start = pos_;
    while (!at_end() && !is_space(peek()) && peek() != '/' && peek() != '"') ++pos_;
    // A trailing '.' terminates the triple.
    while (pos_ > start && text_[pos_ - 1] == '.') --pos_;
    std::string_view token = text_.substr(start, pos_ - start);
    if (token.empty()) fail_at(start, "expected a term");
    auto colon = token.find(':');
    if (colon == std::string_view::npos) fail_at(start, "expected a prefixed name, IRI or variable");
    auto expanded = expand_curie(prefixes_, token);
    if (!expanded) fail_at(start, "unknown prefix '" + std::string(token.substr(0, colon)) + "'");
    auto iri = Iri::parse(*expanded);
    if (!iri) fail_at(start, "invalid IRI <" + *expanded + ">");
    return *iri;
  }

  Term literal() {
    std::size_t start = pos_++;
    std::string lexical;
    while (true) {
      if (at_end()) fail_at(start, "unterminated string");
      char c = text_[pos_++];
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) fail_at(start, "unterminated string");
        char e = text_[pos_++];
        switch (e) {
          case 'n': lexical += '\n'; break;
          case 't': lexical += '\t'; break;
          case 'r': lexical += '\r'; break;
          case '"': lexical += '"'; break;
          case '\\': lexical += '\\'; break;
          default: fail_at(pos_ - 2, "unknown escape sequence");
        }
        continue;
      }
      lexical += c;
    }
    if (peek() == '@') {
      std::size_t tag_start = pos_++;
      std::string tag;
      while (!at_end() && (is_word(peek()) || peek() == '-')) tag += text_[pos_++];
      if (!Term::is_valid_language_tag(tag)) fail_at(tag_start, "malformed language tag");
      return Term::lang_literal(lexical, tag);
    }
    if (peek() == '^' && peek(1) == '^') {
      pos_ += 2;
      Iri dt = peek() == '<' ? iri_ref() : curie();
      return Term::literal(lexical, dt);
    }
    return Term::literal(lexical);
  }

  std::string_view text_;
  const PrefixMap& prefixes_;
  std::size_t pos_ = 0;
};

}  // namespace

Pattern parse_query(std::string_view text, const PrefixMap& prefixes) {
  return QueryParser(text, prefixes).run();
}

std::string format_bindings(const std::vector<Binding>& rows, const std::vector<std::string>& vars,
                            const PrefixMap& prefixes) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? "\t?" : "?") + vars[i];
  out += "\n";
  for (const Binding& row : rows) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i) out += "\t";
      auto it = row.find(vars[i]);
      if (it != row.end()) out += to_turtle(it->second, prefixes);
    }
    out += "\n";
  }
  return out;
}

}  // namespace hdtkg
