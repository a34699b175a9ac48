#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "hdtkg/rdf_io.hpp"
#include "hdtkg/vocab.hpp"
#include "text_util.hpp"

namespace hdtkg {

namespace {

constexpr std::size_t kMaxNesting = 256;

struct SyntaxError {
  std::size_t offset;
  std::string message;
};

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_high(char c) { return static_cast<unsigned char>(c) >= 0x80; }
bool is_name_start(char c) { return is_alpha(c) || c == '_' || is_high(c); }
bool is_name_char(char c) { return is_name_start(c) || is_digit(c) || c == '-' || c == '.'; }

bool has_scheme(std::string_view iri) {
  if (iri.empty() || !is_alpha(iri.front())) return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') return true;
    if (!(is_alpha(c) || is_digit(c) || c == '+' || c == '-' || c == '.')) return false;
  }
  return false;
}

class TurtleParser {
 public:
  TurtleParser(std::string_view text, const Ontology& ont)
      : text_(text), ont_(ont), prefixes_(standard_prefixes(ont)) {}

  ParseResult run() {
    ParseResult result;
    if (auto bad = detail::find_invalid_utf8(text_)) {
      result.diagnostics.push_back(detail::diagnostic_at(text_, *bad, "invalid UTF-8 sequence"));
      result.graph.set_prefixes(prefixes_);
      return result;
    }
    try {
      while (statement()) {
      }
    } catch (const SyntaxError& e) {
      result.diagnostics.push_back(detail::diagnostic_at(text_, e.offset, e.message));
    } catch (const Error& e) {
      result.diagnostics.push_back(detail::diagnostic_at(text_, pos_, e.what()));
    }
    graph_.set_prefixes(prefixes_);
    result.graph = fold_validity(graph_, ont_);
    return result;
  }

 private:
  [[noreturn]] void fail(std::string message) const { throw SyntaxError{pos_, std::move(message)}; }
  [[noreturn]] void fail_at(std::size_t offset, std::string message) const {
    throw SyntaxError{offset, std::move(message)};
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (peek() != c || at_end()) fail(std::string("expected ") + what);
    ++pos_;
  }

  bool keyword_ci(std::string_view word) const {
    if (pos_ + word.size() > text_.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      char c = text_[pos_ + i];
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
      if (c != word[i]) return false;
    }
    char next = pos_ + word.size() < text_.size() ? text_[pos_ + word.size()] : ' ';
    return next == ' ' || next == '\t' || next == '\r' || next == '\n' || next == '<' || next == '#';
  }

  // --- statements -------------------------------------------------------

  bool statement() {
    skip_ws();
    if (at_end()) return false;
    if (peek() == '@') {
      std::size_t start = pos_;
      ++pos_;
      if (starts_with("prefix")) {
        pos_ += 6;
        prefix_directive();
        expect('.', "'.' after @prefix directive");
      } else if (starts_with("base")) {
        pos_ += 4;
        base_directive();
        expect('.', "'.' after @base directive");
      } else {
        fail_at(start, "unknown directive");
      }
      return true;
    }
    if (keyword_ci("PREFIX")) {
      pos_ += 6;
      prefix_directive();
      return true;
    }
    if (keyword_ci("BASE")) {
      pos_ += 4;
      base_directive();
      return true;
    }
    triples();
    expect('.', "'.' at the end of the statement");
    return true;
  }

  void prefix_directive() {
    skip_ws();
    std::size_t start = pos_;
    std::string prefix;
    if (is_alpha(peek()) || is_high(peek())) {
      while (!at_end() && is_name_char(peek())) prefix += text_[pos_++];
      if (prefix.back() == '.') fail_at(pos_ - 1, "prefix name cannot end with '.'");
    }
    if (peek() != ':' || at_end()) fail_at(start, "expected a prefix name followed by ':'");
    ++pos_;
    skip_ws();
    if (peek() != '<') fail("expected an IRI in angle brackets");
    prefixes_.insert_or_assign(prefix, iri_ref().str());
  }

  void base_directive() {
    skip_ws();
    if (peek() != '<') fail("expected an IRI in angle brackets");
    base_ = iri_ref().str();
  }

  void triples() {
    skip_ws();
    if (peek() == '[') {
      Term node = blank_property_list(0);
      skip_ws();
      if (peek() != '.') predicate_object_list(node, 0);
      return;
    }
    Term subject = subject_term();
    predicate_object_list(subject, 0);
  }

  Term subject_term() {
    skip_ws();
    char c = peek();
    if (c == '<') return Term::iri(iri_ref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '(') fail("collections are not supported");
    if (c == '"' || c == '\'' || is_digit(c) || c == '+' || c == '-') fail("a literal cannot be a subject");
    if (c == ':' || is_name_start(c)) return Term::iri(prefixed_name());
    fail("expected a subject");
  }

  void predicate_object_list(const Term& subject, std::size_t depth) {
    while (true) {
      Iri predicate = verb();
      object_list(subject, predicate, depth);
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        ++pos_;
        skip_ws();
      }
      if (at_end() || peek() == '.' || peek() == ']') return;
    }
  }

  Iri verb() {
    skip_ws();
    char c = peek();
    if (c == 'a') {
      char next = peek(1);
      if (!is_name_char(next) && next != ':') {
        ++pos_;
        return Iri(std::string(vocab::kRdfType));
      }
    }
    if (c == '<') return iri_ref();
    if (c == ':' || is_name_start(c)) return prefixed_name();
    fail("expected a predicate");
  }

  void object_list(const Term& subject, const Iri& predicate, std::size_t depth) {
    while (true) {
      Term object = object_term(depth);
      graph_.insert(Statement{subject, predicate, std::move(object), TimeSpan::always()});
      skip_ws();
      if (peek() != ',') return;
      ++pos_;
    }
  }

  Term object_term(std::size_t depth) {
    skip_ws();
    char c = peek();
    if (at_end()) fail("expected an object");
    if (c == '<') return Term::iri(iri_ref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '[') return blank_property_list(depth + 1);
    if (c == '(') fail("collections are not supported");
    if (c == '"' || c == '\'') return string_literal();
    if (is_digit(c) || c == '+' || c == '-' || (c == '.' && is_digit(peek(1)))) return numeric_literal();
    for (std::string_view word : {"true", "false"}) {
      if (starts_with(word)) {
        char next = peek(word.size());
        if (!is_name_char(next) && next != ':') {
          pos_ += word.size();
          return Term::literal(std::string(word), Iri(std::string(vocab::kXsdBoolean)));
        }
      }
    }
    if (c == ':' || is_name_start(c)) return Term::iri(prefixed_name());
    fail("expected an object");
  }

  Term blank_property_list(std::size_t depth) {
    if (depth > kMaxNesting) fail("blank node property lists nested too deeply");
    ++pos_;  // '['
    Term node = fresh_blank();
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      return node;
    }
    predicate_object_list(node, depth);
    expect(']', "']' to close the blank node property list");
    return node;
  }

  // --- terms ------------------------------------------------------------

  Iri iri_ref() {
    std::size_t start = pos_;
    ++pos_;  // '<'
    std::string value;
    while (true) {
      if (at_end()) fail_at(start, "unterminated IRI");
      char c = text_[pos_];
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        std::size_t esc = pos_;
        ++pos_;
        char kind = peek();
        if (kind != 'u' && kind != 'U') fail_at(esc, "only \\u and \\U escapes are allowed in IRIs");
        std::uint32_t cp = unicode_escape(kind == 'u' ? 4 : 8, esc);
        if (!detail::append_utf8(value, cp)) fail_at(esc, "escape is not a Unicode scalar value");
        continue;
      }
      auto uc = static_cast<unsigned char>(c);
      if (uc <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' || c == '`') {
        fail("character not allowed in an IRI");
      }
      value += c;
      ++pos_;
    }
    std::string resolved = resolve(value, start);
    auto iri = Iri::parse(resolved);
    if (!iri) fail_at(start, "invalid IRI <" + resolved + ">");
    return *iri;
  }

  std::uint32_t unicode_escape(std::size_t digits, std::size_t esc_start) {
    ++pos_;  // 'u' or 'U'
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      if (!detail::is_hex(peek()) || at_end()) fail_at(esc_start, "malformed Unicode escape");
      cp = cp * 16 + detail::hex_value(text_[pos_++]);
    }
    return cp;
  }

  std::string resolve(const std::string& ref, std::size_t offset) const {
    if (has_scheme(ref)) return ref;
    if (base_.empty()) fail_at(offset, "relative IRI <" + ref + "> without a base");
    std::string base = base_;
    if (auto hash = base.find('#'); hash != std::string::npos) base.erase(hash);
    if (ref.empty()) return base;
    if (ref.front() == '#') return base + ref;
    auto scheme_end = base.find(':');
    if (ref.starts_with("//")) return base.substr(0, scheme_end + 1) + ref;
    std::size_t path_start = scheme_end + 1;
    if (base.compare(path_start, 2, "//") == 0) {
      path_start = base.find('/', path_start + 2);
      if (path_start == std::string::npos) {
        base += '/';
        path_start = base.size() - 1;
      }
    }
    if (ref.front() == '/') return base.substr(0, path_start) + ref;
    if (auto q = base.find('?', path_start); q != std::string::npos) base.erase(q);
    auto slash = base.rfind('/');
    if (slash == std::string::npos || slash < path_start) return base + "/" + ref;
    return base.substr(0, slash + 1) + ref;
  }

  Iri prefixed_name() {
    std::size_t start = pos_;
    std::string prefix;
    while (!at_end() && peek() != ':' && is_name_char(peek())) prefix += text_[pos_++];
    if (peek() != ':' || at_end()) fail_at(start, "expected a prefixed name");
    if (!prefix.empty() && prefix.back() == '.') fail_at(start, "prefix name cannot end with '.'");
    ++pos_;
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail_at(start, "unknown prefix '" + prefix + "'");

    std::string local;
    std::size_t end_pos = pos_;
    std::size_t end_len = 0;
    while (!at_end()) {
      char c = peek();
      bool escaped = false;
      if (local.empty() && (c == '-' || c == '.')) break;
      if (is_name_char(c) || c == ':') {
        local += c;
        ++pos_;
      } else if (c == '%' && detail::is_hex(peek(1)) && detail::is_hex(peek(2))) {
        local += text_.substr(pos_, 3);
        pos_ += 3;
      } else if (c == '\\' && pos_ + 1 < text_.size() &&
                 std::string_view("_~.-!$&'()*+,;=/?#@%").find(peek(1)) != std::string_view::npos) {
        local += peek(1);
        pos_ += 2;
        escaped = true;
      } else {
        break;
      }
      if (escaped || local.back() != '.') {
        end_pos = pos_;
        end_len = local.size();
      }
    }
    // Trailing dots belong to the statement terminator.
    pos_ = end_pos;
    local.resize(end_len);
    std::string full = it->second + local;
    auto iri = Iri::parse(full);
    if (!iri) fail_at(start, "prefixed name expands to an invalid IRI <" + full + ">");
    return *iri;
  }

  Term blank_label() {
    std::size_t start = pos_;
    pos_ += 2;
    std::string label;
    if (!(is_alpha(peek()) || is_digit(peek()) || peek() == '_') || at_end()) {
      fail_at(start, "expected a blank node label");
    }
    while (!at_end() && (is_alpha(peek()) || is_digit(peek()) || peek() == '_' || peek() == '-' || peek() == '.')) {
      label += text_[pos_++];
    }
    while (label.back() == '.') {
      label.pop_back();
      --pos_;
    }
    return Term::blank(explicit_label(label));
  }

  Term string_literal() {
    std::size_t start = pos_;
    char quote = peek();
    bool is_long = peek(1) == quote && peek(2) == quote;
    pos_ += is_long ? 3 : 1;
    std::string lexical;
    while (true) {
      if (at_end()) fail_at(start, "unterminated string");
      char c = text_[pos_];
      if (is_long) {
        if (c == quote && peek(1) == quote && peek(2) == quote) {
          pos_ += 3;
          // """a"""" ends with the last three quotes.
          while (peek() == quote && !at_end()) {
            lexical += quote;
            ++pos_;
          }
          break;
        }
      } else {
        if (c == quote) {
          ++pos_;
          break;
        }
        if (c == '\n' || c == '\r') fail("line break inside a short string");
      }
      if (c == '\\') {
        string_escape(lexical);
        continue;
      }
      lexical += c;
      ++pos_;
    }

    if (peek() == '@') {
      std::size_t tag_start = pos_;
      ++pos_;
      std::string tag;
      while (!at_end() && (is_alpha(peek()) || is_digit(peek()) || peek() == '-')) tag += text_[pos_++];
      if (!Term::is_valid_language_tag(tag)) fail_at(tag_start, "malformed language tag");
      return Term::lang_literal(std::move(lexical), std::move(tag));
    }
    if (peek() == '^' && peek(1) == '^') {
      pos_ += 2;
      char c = peek();
      if (c != '<' && c != ':' && !is_name_start(c)) fail("expected a datatype IRI");
      Iri datatype = c == '<' ? iri_ref() : prefixed_name();
      return Term::literal(std::move(lexical), std::move(datatype));
    }
    return Term::literal(std::move(lexical));
  }

  void string_escape(std::string& out) {
    std::size_t esc = pos_;
    ++pos_;
    char c = peek();
    if (at_end()) fail_at(esc, "unterminated escape");
    switch (c) {
      case 't': out += '\t'; break;
      case 'b': out += '\b'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case 'f': out += '\f'; break;
      case '"': out += '"'; break;
      case '\'': out += '\''; break;
      case '\\': out += '\\'; break;
      case 'u':
      case 'U': {
        std::uint32_t cp = unicode_escape(c == 'u' ? 4 : 8, esc);
        if (!detail::append_utf8(out, cp)) fail_at(esc, "escape is not a Unicode scalar value");
        return;
      }
      default:
        fail_at(esc, "unknown escape sequence");
    }
    ++pos_;
  }

  Term numeric_literal() {
    std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    std::size_t int_digits = 0;
    while (is_digit(peek()) && !at_end()) {
      ++pos_;
      ++int_digits;
    }
    std::size_t frac_digits = 0;
    if (peek() == '.' && is_digit(peek(1))) {
      ++pos_;
      while (is_digit(peek()) && !at_end()) {
        ++pos_;
        ++frac_digits;
      }
    }
    bool exponent = false;
    if ((peek() == 'e' || peek() == 'E') && int_digits + frac_digits > 0) {
      std::size_t save = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (is_digit(peek())) {
        while (is_digit(peek()) && !at_end()) ++pos_;
        exponent = true;
      } else {
        pos_ = save;
      }
    }
    if (int_digits + frac_digits == 0) fail_at(start, "malformed number");
    std::string lexical(text_.substr(start, pos_ - start));
    std::string_view type = exponent ? vocab::kXsdDouble : frac_digits > 0 ? vocab::kXsdDecimal : vocab::kXsdInteger;
    return Term::literal(std::move(lexical), Iri(std::string(type)));
  }

  // --- blank node naming --------------------------------------------------

  std::string explicit_label(const std::string& label) {
    auto it = explicit_.find(label);
    if (it != explicit_.end()) return it->second;
    std::string actual = label;
    while (used_.contains(actual)) actual += "_";
    used_.insert(actual);
    explicit_.emplace(label, actual);
    return actual;
  }

  Term fresh_blank() {
    std::string label;
    do {
      label = "anon" + std::to_string(anon_counter_++);
    } while (used_.contains(label));
    used_.insert(label);
    return Term::blank(label);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const Ontology& ont_;
  PrefixMap prefixes_;
  std::string base_;
  Graph graph_;
  std::unordered_map<std::string, std::string> explicit_;
  std::unordered_set<std::string> used_;
  std::size_t anon_counter_ = 0;
};

}  // namespace

ParseResult parse_turtle(std::string_view text, const Ontology& ont) {
  return TurtleParser(text, ont).run();
}

std::string serialize_turtle(const Graph& g, const Ontology& ont) {
  Graph wire = expand_validity(g, ont);
  wire = relabel_blanks(wire, canonical_blank_labels(wire));

  PrefixMap prefixes = standard_prefixes(ont);
  for (const auto& [prefix, iri] : g.prefixes()) prefixes.insert_or_assign(prefix, iri);

  std::string out;
  for (const auto& [prefix, iri] : prefixes) out += "@prefix " + prefix + ": <" + iri + "> .\n";

  const Iri type{std::string(vocab::kRdfType)};
  const Statement* prev = nullptr;
  for (const Statement& st : wire) {
    if (prev == nullptr || prev->subject != st.subject) {
      if (prev != nullptr) out += " .\n";
      out += "\n" + to_turtle(st.subject, prefixes) + " ";
    } else if (prev->predicate != st.predicate) {
      out += " ;\n    ";
    } else {
      out += " ,\n        ";
      out += to_turtle(st.object, prefixes);
      prev = &st;
      continue;
    }
    out += st.predicate == type ? std::string("a") : to_turtle(st.predicate, prefixes);
    out += " " + to_turtle(st.object, prefixes);
    prev = &st;
  }
  if (prev != nullptr) out += " .\n";
  return out;
}

}  // namespace hdtkg
