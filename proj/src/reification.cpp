#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "hdtkg/rdf_io.hpp"
#include "hdtkg/vocab.hpp"

namespace hdtkg {

Graph expand_validity(const Graph& g, const Ontology& ont) {
  Graph out(g.prefixes());
  std::unordered_set<std::string> used;
  for (const Statement& st : g) {
    if (st.subject.is_blank()) used.insert(st.subject.value());
    if (st.object.is_blank()) used.insert(st.object.value());
  }

  const Iri type{std::string(vocab::kRdfType)};
  const Term statement_class = Term::iri(vocab::kRdfStatement);
  const Iri rdf_subject{std::string(vocab::kRdfSubject)};
  const Iri rdf_predicate{std::string(vocab::kRdfPredicate)};
  const Iri rdf_object{std::string(vocab::kRdfObject)};
  const Iri valid_from = ont.valid_from_iri();
  const Iri valid_to = ont.valid_to_iri();
  const Iri datatype = ont.iso8601_datatype();

  std::size_t counter = 0;
  for (const Statement& st : g) {
    if (st.validity.is_always()) {
      out.insert(st);
      continue;
    }
    std::string label;
    do {
      label = "v" + std::to_string(counter++);
    } while (used.contains(label));
    used.insert(label);
    Term node = Term::blank(label);
    out.insert(node, type, statement_class);
    out.insert(node, rdf_subject, st.subject);
    out.insert(node, rdf_predicate, Term::iri(st.predicate));
    out.insert(node, rdf_object, st.object);
    if (st.validity.start()) out.insert(node, valid_from, Term::literal(format_span_start(st.validity), datatype));
    if (st.validity.end()) out.insert(node, valid_to, Term::literal(format_span_end(st.validity), datatype));
  }
  return out;
}

namespace {

struct Block {
  std::vector<const Statement*> quads;
  std::optional<Term> subject;
  std::optional<Term> predicate;
  std::optional<Term> object;
  std::optional<Term> from;
  std::optional<Term> to;
  int type_count = 0;
  int subject_count = 0;
  int predicate_count = 0;
  int object_count = 0;
  int from_count = 0;
  int to_count = 0;
  bool other = false;
};

// A single date expression such as "1749" or "1701~", as written for one side.
std::optional<TimeSpan> parse_side(const Term& literal, const Iri& datatype) {
  if (!literal.is_literal() || literal.datatype() != datatype.str()) return std::nullopt;
  const std::string& text = literal.value();
  if (text.find('/') != std::string::npos) return std::nullopt;
  try {
    TimeSpan span = parse_time_span(text);
    if (span.is_always()) return std::nullopt;
    return span;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

Graph fold_validity(const Graph& wire, const Ontology& ont) {
  const Iri type{std::string(vocab::kRdfType)};
  const Term statement_class = Term::iri(vocab::kRdfStatement);
  const Iri rdf_subject{std::string(vocab::kRdfSubject)};
  const Iri rdf_predicate{std::string(vocab::kRdfPredicate)};
  const Iri rdf_object{std::string(vocab::kRdfObject)};
  const Iri valid_from = ont.valid_from_iri();
  const Iri valid_to = ont.valid_to_iri();
  const Iri datatype = ont.iso8601_datatype();

  std::map<std::string, Block> blocks;
  std::unordered_set<std::string> used_as_object;
  for (const Statement& st : wire) {
    if (st.object.is_blank()) used_as_object.insert(st.object.value());
    if (!st.subject.is_blank()) continue;
    Block& b = blocks[st.subject.value()];
    b.quads.push_back(&st);
    if (!st.validity.is_always()) {
      b.other = true;
    } else if (st.predicate == type && st.object == statement_class) {
      ++b.type_count;
    } else if (st.predicate == rdf_subject) {
      ++b.subject_count;
      b.subject = st.object;
    } else if (st.predicate == rdf_predicate) {
      ++b.predicate_count;
      b.predicate = st.object;
    } else if (st.predicate == rdf_object) {
      ++b.object_count;
      b.object = st.object;
    } else if (st.predicate == valid_from) {
      ++b.from_count;
      b.from = st.object;
    } else if (st.predicate == valid_to) {
      ++b.to_count;
      b.to = st.object;
    } else {
      b.other = true;
    }
  }

  Graph out(wire.prefixes());
  std::unordered_set<const Statement*> consumed;
  for (const auto& [label, b] : blocks) {
    if (b.other || used_as_object.contains(label)) continue;
    if (b.type_count != 1 || b.subject_count != 1 || b.predicate_count != 1 || b.object_count != 1) continue;
    if (b.from_count > 1 || b.to_count > 1 || b.from_count + b.to_count == 0) continue;
    if (b.subject->is_literal() || !b.predicate->is_iri()) continue;

    std::optional<Instant> start;
    std::optional<Instant> end;
    bool uncertain = false;
    bool approximate = false;
    if (b.from) {
      auto side = parse_side(*b.from, datatype);
      if (!side || !side->start()) continue;
      start = side->start();
      uncertain |= side->uncertain();
      approximate |= side->approximate();
    }
    if (b.to) {
      auto side = parse_side(*b.to, datatype);
      if (!side || !side->end()) continue;
      end = side->end();
      uncertain |= side->uncertain();
      approximate |= side->approximate();
    }
    if (start && end && !(*start < *end)) continue;

    out.insert(*b.subject, b.predicate->as_iri(), *b.object, TimeSpan(start, end, uncertain, approximate));
    for (const Statement* q : b.quads) consumed.insert(q);
  }
  for (const Statement& st : wire) {
    if (!consumed.contains(&st)) out.insert(st);
  }
  return out;
}

}  // namespace hdtkg
