#include "hdtkg/graph.hpp"

#include <algorithm>

#include "hdtkg/errors.hpp"

namespace hdtkg {

std::string to_string(const Statement& st) {
  std::string out = st.subject.canonical() + " <" + st.predicate.str() + "> " + st.object.canonical();
  if (!st.validity.is_always()) out += " [" + format_time_span(st.validity) + "]";
  return out;
}

Graph::Graph(const Graph& other) : statements_(other.statements_), prefixes_(other.prefixes_) {
  rebuild_indexes();
}

Graph& Graph::operator=(const Graph& other) {
  if (this != &other) {
    Graph copy(other);
    *this = std::move(copy);
  }
  return *this;
}

InsertOutcome Graph::insert(Statement st) {
  if (st.subject.is_literal()) {
    throw MalformedStatement("literal " + st.subject.canonical() + " cannot be a subject");
  }
  auto [it, inserted] = statements_.insert(std::move(st));
  if (!inserted) return InsertOutcome::duplicate;
  index(&*it);
  return InsertOutcome::inserted;
}

InsertOutcome Graph::insert(Term subject, Iri predicate, Term object, TimeSpan validity) {
  return insert(Statement{std::move(subject), std::move(predicate), std::move(object), validity});
}

bool Graph::remove(const Statement& st) {
  auto it = statements_.find(st);
  if (it == statements_.end()) return false;
  unindex(&*it);
  statements_.erase(it);
  return true;
}

void Graph::clear() {
  statements_.clear();
  by_subject_.clear();
  by_predicate_.clear();
  by_object_.clear();
}

void Graph::index(const Statement* st) {
  by_subject_[st->subject.canonical()].push_back(st);
  by_predicate_[st->predicate.str()].push_back(st);
  by_object_[st->object.canonical()].push_back(st);
}

void Graph::unindex(const Statement* st) {
  auto drop = [st](std::unordered_map<std::string, Bucket>& index, const std::string& key) {
    auto it = index.find(key);
    if (it == index.end()) return;
    auto& bucket = it->second;
    bucket.erase(std::find(bucket.begin(), bucket.end(), st));
    if (bucket.empty()) index.erase(it);
  };
  drop(by_subject_, st->subject.canonical());
  drop(by_predicate_, st->predicate.str());
  drop(by_object_, st->object.canonical());
}

void Graph::rebuild_indexes() {
  by_subject_.clear();
  by_predicate_.clear();
  by_object_.clear();
  for (const Statement& st : statements_) index(&st);
}

std::vector<Statement> Graph::match(const std::optional<Term>& subject,
                                    const std::optional<Iri>& predicate,
                                    const std::optional<Term>& object,
                                    std::optional<Instant> at) const {
  auto accepts = [&](const Statement& st) {
    if (subject && st.subject != *subject) return false;
    if (predicate && st.predicate != *predicate) return false;
    if (object && st.object != *object) return false;
    if (at && !st.validity.contains(*at)) return false;
    return true;
  };

  // Scan the smallest bucket among the bound positions.
  static const Bucket kEmpty;
  const Bucket* best = nullptr;
  auto consider = [&best](const std::unordered_map<std::string, Bucket>& index, const std::string& key) {
    auto it = index.find(key);
    const Bucket* bucket = it == index.end() ? &kEmpty : &it->second;
    if (best == nullptr || bucket->size() < best->size()) best = bucket;
  };
  if (subject) consider(by_subject_, subject->canonical());
  if (predicate) consider(by_predicate_, predicate->str());
  if (object) consider(by_object_, object->canonical());

  std::vector<Statement> out;
  if (best == nullptr) {
    for (const Statement& st : statements_) {
      if (accepts(st)) out.push_back(st);
    }
    return out;
  }
  for (const Statement* st : *best) {
    if (accepts(*st)) out.push_back(*st);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hdtkg
