#include <cstdint>
#include <optional>
#include <string>

#include "hdtkg/rdf_io.hpp"
#include "text_util.hpp"

namespace hdtkg {

namespace {

struct LineError {
  std::size_t offset;  // within the line
  std::string message;
};

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class LineParser {
 public:
  explicit LineParser(std::string_view line) : line_(line) {}

  // std::nullopt for a blank or comment-only line.
  std::optional<Statement> run() {
    skip_ws();
    if (at_end() || peek() == '#') return std::nullopt;
    Term subject = peek() == '<' ? Term::iri(iri()) : peek() == '_' ? blank() : fail<Term>("expected a subject");
    require_ws();
    if (peek() != '<') fail<int>("expected a predicate IRI");
    Iri predicate = iri();
    require_ws();
    Term object = object_term();
    skip_ws();
    if (peek() != '.' || at_end()) fail<int>("expected '.'");
    ++pos_;
    skip_ws();
    if (!at_end() && peek() != '#') fail<int>("unexpected text after '.'");
    return Statement{std::move(subject), std::move(predicate), std::move(object), TimeSpan::always()};
  }

 private:
  template <typename T>
  [[noreturn]] T fail(std::string message) const {
    throw LineError{pos_, std::move(message)};
  }
  [[noreturn]] void fail_at(std::size_t offset, std::string message) const {
    throw LineError{offset, std::move(message)};
  }

  bool at_end() const { return pos_ >= line_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < line_.size() ? line_[pos_ + ahead] : '\0'; }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_;
  }
  void require_ws() {
    std::size_t before = pos_;
    skip_ws();
    if (pos_ == before) fail<int>("expected whitespace");
  }

  std::uint32_t unicode_escape(std::size_t esc) {
    std::size_t digits = peek() == 'u' ? 4 : 8;
    ++pos_;
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      if (at_end() || !detail::is_hex(peek())) fail_at(esc, "malformed Unicode escape");
      cp = cp * 16 + detail::hex_value(line_[pos_++]);
    }
    return cp;
  }

  Iri iri() {
    std::size_t start = pos_;
    ++pos_;
    std::string value;
    while (true) {
      if (at_end()) fail_at(start, "unterminated IRI");
      char c = line_[pos_];
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        std::size_t esc = pos_++;
        if (peek() != 'u' && peek() != 'U') fail_at(esc, "only \\u and \\U escapes are allowed in IRIs");
        if (!detail::append_utf8(value, unicode_escape(esc))) fail_at(esc, "escape is not a Unicode scalar value");
        continue;
      }
      value += c;
      ++pos_;
    }
    auto parsed = Iri::parse(value);
    if (!parsed) fail_at(start, "invalid absolute IRI <" + value + ">");
    return *parsed;
  }

  Term blank() {
    std::size_t start = pos_;
    if (peek(1) != ':') fail<int>("expected '_:'");
    pos_ += 2;
    std::string label;
    while (!at_end() && (is_alpha(peek()) || is_digit(peek()) || peek() == '_' || peek() == '-' || peek() == '.')) {
      label += line_[pos_++];
    }
    while (!label.empty() && label.back() == '.') {
      label.pop_back();
      --pos_;
    }
    if (!Term::is_valid_blank_label(label)) fail_at(start, "malformed blank node label");
    return Term::blank(std::move(label));
  }

  Term object_term() {
    char c = peek();
    if (c == '<') return Term::iri(iri());
    if (c == '_') return blank();
    if (c != '"') fail<int>("expected an object");
    std::size_t start = pos_;
    ++pos_;
    std::string lexical;
    while (true) {
      if (at_end()) fail_at(start, "unterminated string");
      char ch = line_[pos_];
      if (ch == '"') {
        ++pos_;
        break;
      }
      if (ch == '\\') {
        std::size_t esc = pos_++;
        switch (peek()) {
          case 't': lexical += '\t'; break;
          case 'b': lexical += '\b'; break;
          case 'n': lexical += '\n'; break;
          case 'r': lexical += '\r'; break;
          case 'f': lexical += '\f'; break;
          case '"': lexical += '"'; break;
          case '\'': lexical += '\''; break;
          case '\\': lexical += '\\'; break;
          case 'u':
          case 'U':
            if (!detail::append_utf8(lexical, unicode_escape(esc))) {
              fail_at(esc, "escape is not a Unicode scalar value");
            }
            continue;
          default:
            fail_at(esc, "unknown escape sequence");
        }
        ++pos_;
        continue;
      }
      lexical += ch;
      ++pos_;
    }
    if (peek() == '@') {
      std::size_t tag_start = pos_++;
      std::string tag;
      while (!at_end() && (is_alpha(peek()) || is_digit(peek()) || peek() == '-')) tag += line_[pos_++];
      if (!Term::is_valid_language_tag(tag)) fail_at(tag_start, "malformed language tag");
      return Term::lang_literal(std::move(lexical), std::move(tag));
    }
    if (peek() == '^' && peek(1) == '^') {
      pos_ += 2;
      if (peek() != '<') fail<int>("expected a datatype IRI");
      return Term::literal(std::move(lexical), iri());
    }
    return Term::literal(std::move(lexical));
  }

  std::string_view line_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseResult parse_ntriples(std::string_view text, const Ontology& ont) {
  ParseResult result;
  Graph raw(standard_prefixes(ont));
  if (auto bad = detail::find_invalid_utf8(text)) {
    result.diagnostics.push_back(detail::diagnostic_at(text, *bad, "invalid UTF-8 sequence"));
    result.graph = std::move(raw);
    return result;
  }
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    try {
      if (auto st = LineParser(line).run()) raw.insert(std::move(*st));
    } catch (const LineError& e) {
      result.diagnostics.push_back(detail::diagnostic_at(text, line_start + e.offset, e.message));
    } catch (const Error& e) {
      result.diagnostics.push_back(detail::diagnostic_at(text, line_start, e.what()));
    }
    line_start = line_end + 1;
  }
  result.graph = fold_validity(raw, ont);
  return result;
}

std::string serialize_ntriples(const Graph& g, const Ontology& ont) {
  Graph wire = expand_validity(g, ont);
  wire = relabel_blanks(wire, canonical_blank_labels(wire));
  std::string out;
  for (const Statement& st : wire) {
    out += st.subject.canonical() + " <" + st.predicate.str() + "> " + st.object.canonical() + " .\n";
  }
  return out;
}

}  // namespace hdtkg
