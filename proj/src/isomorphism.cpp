#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "hdtkg/graph.hpp"

namespace hdtkg {

namespace {

// Leaves explored by the tie-breaking search before it settles for the first
// candidate of each remaining tied class.
constexpr std::size_t kSearchBudget = 512;

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) {
    for (const Statement& st : g) {
      bool involved = false;
      if (st.subject.is_blank()) {
        node_of(st.subject.value());
        involved = true;
      }
      if (st.object.is_blank()) {
        node_of(st.object.value());
        involved = true;
      }
      if (involved) edges_.push_back(&st);
    }
    // Node ids follow label order only to make the traversal deterministic;
    // the labels chosen below never depend on it.
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) ids_[sorted[i]] = i;
    labels_ = std::move(sorted);
  }

  std::size_t node_count() const { return labels_.size(); }

  // Canonical labeling plus the canonical rendering it produces.
  std::pair<std::vector<std::size_t>, std::vector<std::string>> run() {
    std::vector<std::size_t> colors(labels_.size(), 0);
    best_form_.clear();
    best_order_.clear();
    leaves_ = 0;
    search(colors);
    return {best_order_, best_form_};
  }

  const std::vector<std::string>& labels() const { return labels_; }

 private:
  void node_of(const std::string& label) {
    if (seen_.emplace(label, labels_.size()).second) labels_.push_back(label);
  }

  std::size_t id(const Term& t) const { return ids_.at(t.value()); }

  std::string render(const Term& t, const std::vector<std::size_t>& colors) const {
    if (t.is_blank()) return "#" + std::to_string(colors[id(t)]);
    return t.canonical();
  }

  std::string edge_text(const Statement& st, const std::vector<std::size_t>& colors) const {
    return render(st.subject, colors) + " <" + st.predicate.str() + "> " + render(st.object, colors) +
           " " + format_time_span(st.validity);
  }

  static std::size_t class_count(const std::vector<std::size_t>& colors) {
    std::vector<std::size_t> copy = colors;
    std::sort(copy.begin(), copy.end());
    return static_cast<std::size_t>(std::unique(copy.begin(), copy.end()) - copy.begin());
  }

  std::vector<std::size_t> refine(std::vector<std::size_t> colors) const {
    std::size_t classes = class_count(colors);
    while (true) {
      std::vector<std::vector<std::string>> signatures(colors.size());
      for (const Statement* st : edges_) {
        std::string text = edge_text(*st, colors);
        if (st->subject.is_blank()) signatures[id(st->subject)].push_back("S" + text);
        if (st->object.is_blank()) signatures[id(st->object)].push_back("O" + text);
      }
      std::vector<std::string> keys(colors.size());
      for (std::size_t i = 0; i < colors.size(); ++i) {
        std::sort(signatures[i].begin(), signatures[i].end());
        std::string key = std::to_string(colors[i]);
        for (const auto& s : signatures[i]) key += "|" + s;
        keys[i] = std::move(key);
      }
      std::vector<std::string> distinct = keys;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      std::vector<std::size_t> next(colors.size());
      for (std::size_t i = 0; i < colors.size(); ++i) {
        next[i] = static_cast<std::size_t>(
            std::lower_bound(distinct.begin(), distinct.end(), keys[i]) - distinct.begin());
      }
      colors = std::move(next);
      if (distinct.size() == classes) return colors;
      classes = distinct.size();
    }
  }

  void search(const std::vector<std::size_t>& start) {
    std::vector<std::size_t> colors = refine(start);

    std::map<std::size_t, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < colors.size(); ++i) classes[colors[i]].push_back(i);
    const std::vector<std::size_t>* tied = nullptr;
    for (const auto& [color, members] : classes) {
      if (members.size() > 1) {
        tied = &members;
        break;
      }
    }

    if (tied == nullptr) {
      ++leaves_;
      std::vector<std::string> form;
      form.reserve(edges_.size());
      for (const Statement* st : edges_) form.push_back(edge_text(*st, colors));
      std::sort(form.begin(), form.end());
      if (best_order_.empty() || form < best_form_) {
        best_form_ = std::move(form);
        best_order_ = colors;
      }
      return;
    }

    for (std::size_t member : *tied) {
      std::vector<std::size_t> split(colors.size());
      for (std::size_t i = 0; i < colors.size(); ++i) split[i] = 2 * colors[i] + 1;
      split[member] = 2 * colors[member];
      search(split);
      if (leaves_ >= kSearchBudget) break;
    }
  }

  std::unordered_map<std::string, std::size_t> seen_;
  std::unordered_map<std::string, std::size_t> ids_;
  std::vector<std::string> labels_;
  std::vector<const Statement*> edges_;

  std::vector<std::string> best_form_;
  std::vector<std::size_t> best_order_;
  std::size_t leaves_ = 0;
};

}  // namespace

std::unordered_map<std::string, std::string> canonical_blank_labels(const Graph& g) {
  Canonicalizer canon(g);
  std::unordered_map<std::string, std::string> out;
  if (canon.node_count() == 0) return out;
  auto [colors, form] = canon.run();
  // Colors are distinct at a leaf; their rank is the canonical index.
  std::vector<std::size_t> order(colors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return colors[a] < colors[b]; });
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    out[canon.labels()[order[rank]]] = "b" + std::to_string(rank);
  }
  return out;
}

Graph relabel_blanks(const Graph& g, const std::unordered_map<std::string, std::string>& labels) {
  auto rename = [&labels](const Term& t) {
    if (!t.is_blank()) return t;
    auto it = labels.find(t.value());
    return it == labels.end() ? t : Term::blank(it->second);
  };
  Graph out(g.prefixes());
  for (const Statement& st : g) {
    out.insert(Statement{rename(st.subject), st.predicate, rename(st.object), st.validity});
  }
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  Graph ca = relabel_blanks(a, canonical_blank_labels(a));
  Graph cb = relabel_blanks(b, canonical_blank_labels(b));
  return ca == cb;
}

}  // namespace hdtkg
