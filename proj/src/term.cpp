#include "hdtkg/term.hpp"

#include <cstdio>

#include "hdtkg/errors.hpp"
#include "hdtkg/vocab.hpp"

namespace hdtkg {

namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_forbidden_iri_char(unsigned char c) {
  if (c <= 0x20 || c == 0x7f) return true;
  switch (c) {
    case '<': case '>': case '"': case '{': case '}':
    case '|': case '^': case '`': case '\\':
      return true;
    default:
      return false;
  }
}

bool is_local_name_char(char c) { return is_alpha(c) || is_digit(c) || c == '_' || c == '-'; }

bool is_safe_local_name(std::string_view local) {
  if (local.empty()) return true;
  if (local.front() == '-') return false;
  for (char c : local) {
    if (!is_local_name_char(c)) return false;
  }
  return true;
}

}  // namespace

bool Iri::is_valid(std::string_view value) {
  if (value.empty() || !is_alpha(value.front())) return false;
  std::size_t i = 1;
  while (i < value.size() && (is_alpha(value[i]) || is_digit(value[i]) || value[i] == '+' ||
                              value[i] == '-' || value[i] == '.')) {
    ++i;
  }
  if (i >= value.size() || value[i] != ':') return false;
  for (unsigned char c : value) {
    if (is_forbidden_iri_char(c)) return false;
  }
  return true;
}

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_)) throw MalformedStatement("invalid IRI '" + value_ + "'");
}

std::optional<Iri> Iri::parse(std::string_view value) {
  if (!is_valid(value)) return std::nullopt;
  return Iri(std::string(value), Unchecked{});
}

bool Term::is_valid_blank_label(std::string_view label) {
  if (label.empty()) return false;
  char first = label.front();
  if (!(is_alpha(first) || is_digit(first) || first == '_')) return false;
  if (label.back() == '.') return false;
  for (char c : label) {
    if (!(is_local_name_char(c) || c == '.')) return false;
  }
  return true;
}

bool Term::is_valid_language_tag(std::string_view tag) {
  if (tag.empty()) return false;
  bool first_subtag = true;
  std::size_t run = 0;
  for (char c : tag) {
    if (c == '-') {
      if (run == 0) return false;
      first_subtag = false;
      run = 0;
      continue;
    }
    if (first_subtag ? !is_alpha(c) : !(is_alpha(c) || is_digit(c))) return false;
    ++run;
  }
  return run > 0;
}

Term::Term(TermKind kind, std::string value, std::string datatype, std::string language)
    : kind_(kind),
      value_(std::move(value)),
      datatype_(std::move(datatype)),
      language_(std::move(language)) {
  switch (kind_) {
    case TermKind::iri:
      canonical_ = "<" + value_ + ">";
      break;
    case TermKind::blank:
      canonical_ = "_:" + value_;
      break;
    case TermKind::literal:
      canonical_ = "\"" + escape_literal(value_) + "\"";
      if (!language_.empty()) {
        canonical_ += "@" + language_;
      } else if (datatype_ != vocab::kXsdString) {
        canonical_ += "^^<" + datatype_ + ">";
      }
      break;
  }
}

Term Term::iri(Iri value) { return Term(TermKind::iri, value.str(), {}, {}); }

Term Term::iri(std::string_view value) { return iri(Iri(std::string(value))); }

Term Term::blank(std::string label) {
  if (!is_valid_blank_label(label)) {
    throw MalformedStatement("invalid blank node label '" + label + "'");
  }
  return Term(TermKind::blank, std::move(label), {}, {});
}

Term Term::literal(std::string lexical) {
  return Term(TermKind::literal, std::move(lexical), std::string(vocab::kXsdString), {});
}

Term Term::literal(std::string lexical, Iri datatype) {
  return Term(TermKind::literal, std::move(lexical), datatype.str(), {});
}

Term Term::lang_literal(std::string lexical, std::string language) {
  if (!is_valid_language_tag(language)) {
    throw MalformedStatement("invalid language tag '" + language + "'");
  }
  for (char& c : language) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return Term(TermKind::literal, std::move(lexical), std::string(vocab::kRdfLangString),
              std::move(language));
}

Iri Term::as_iri() const {
  if (kind_ != TermKind::iri) throw MalformedStatement("term " + canonical_ + " is not an IRI");
  return Iri(value_);
}

std::string escape_literal(std::string_view lexical) {
  std::string out;
  out.reserve(lexical.size());
  for (unsigned char c : lexical) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (c < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(c));
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

std::optional<std::string> compact_iri(const PrefixMap& prefixes, std::string_view iri) {
  const std::string* best_prefix = nullptr;
  std::size_t best_len = 0;
  for (const auto& [prefix, base] : prefixes) {
    if (base.size() < best_len || base.empty()) continue;
    if (iri.size() < base.size() || iri.compare(0, base.size(), base) != 0) continue;
    if (!is_safe_local_name(iri.substr(base.size()))) continue;
    // Longest namespace wins; std::map order breaks ties by prefix name.
    if (best_prefix == nullptr || base.size() > best_len) {
      best_prefix = &prefix;
      best_len = base.size();
    }
  }
  if (best_prefix == nullptr) return std::nullopt;
  return *best_prefix + ":" + std::string(iri.substr(best_len));
}

std::optional<std::string> expand_curie(const PrefixMap& prefixes, std::string_view curie) {
  auto colon = curie.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto it = prefixes.find(curie.substr(0, colon));
  if (it == prefixes.end()) return std::nullopt;
  return it->second + std::string(curie.substr(colon + 1));
}

std::string to_turtle(const Iri& iri, const PrefixMap& prefixes) {
  if (auto curie = compact_iri(prefixes, iri.str())) return *curie;
  return "<" + iri.str() + ">";
}

std::string to_turtle(const Term& term, const PrefixMap& prefixes) {
  switch (term.kind()) {
    case TermKind::iri:
      return to_turtle(Iri::parse(term.value()).value(), prefixes);
    case TermKind::blank:
      return "_:" + term.value();
    case TermKind::literal: {
      std::string out = "\"" + escape_literal(term.value()) + "\"";
      if (!term.language().empty()) {
        out += "@" + term.language();
      } else if (term.datatype() != vocab::kXsdString) {
        out += "^^" + to_turtle(Iri::parse(term.datatype()).value(), prefixes);
      }
      return out;
    }
  }
  return term.canonical();
}

}  // namespace hdtkg
