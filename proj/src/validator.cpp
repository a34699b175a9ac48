#include "hdtkg/validator.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "hdtkg/reasoner.hpp"
#include "hdtkg/vocab.hpp"

namespace hdtkg {

namespace {

struct RuleInfo {
  const char* id;
  const char* summary;
  RuleLevel default_level;
};

constexpr RuleInfo kRules[] = {
    {"V1", "subjects and objects of a property belong to its declared domain and range", RuleLevel::error},
    {"V2", "every Heritage Entity (HC1) has at most one Heritage Digital Twin (HP1); none is tolerated",
     RuleLevel::error},
    {"V3", "every Tangible Aspect (HC3) has at least one Intangible Aspect (HP5)", RuleLevel::warning},
    {"V4", "digital twin composition (HP3) contains no cycle", RuleLevel::error},
    {"V5", "predicates and classes are registered, and constrained properties link typed nodes",
     RuleLevel::warning},
    {"V6", "validity bounds and time-span values are ISO 8601", RuleLevel::error},
};

const RuleInfo* find_rule(std::string_view id) {
  for (const RuleInfo& r : kRules) {
    if (id == r.id) return &r;
  }
  return nullptr;
}

std::size_t rule_rank(std::string_view id) {
  for (std::size_t i = 0; i < std::size(kRules); ++i) {
    if (id == kRules[i].id) return i;
  }
  return std::size(kRules);
}

bool in_namespace(std::string_view iri, std::string_view ns) { return iri.starts_with(ns); }

bool is_builtin_vocabulary(std::string_view iri) {
  return in_namespace(iri, vocab::kRdf) || in_namespace(iri, vocab::kRdfs) || in_namespace(iri, vocab::kOwl) ||
         in_namespace(iri, vocab::kXsd);
}

class Validator {
 public:
  Validator(const Graph& g, const Ontology& ont, const ValidationConfig& cfg)
      : g_(g),
        ont_(ont),
        cfg_(cfg),
        prefixes_(standard_prefixes(ont)),
        type_(std::string(vocab::kRdfType)),
        p82_(ont.resolve("crm:P82")) {}

  ValidationReport run() {
    collect_types();
    check_conformance();
    check_twins();
    check_tangible();
    check_composition();
    check_vocabulary();
    check_literals();

    std::sort(report_.violations.begin(), report_.violations.end(), [](const Violation& a, const Violation& b) {
      return sort_key(a) < sort_key(b);
    });
    for (const Violation& v : report_.violations) {
      RuleStats& s = report_.stats[v.rule_id];
      (v.severity == Severity::error ? s.errors : s.warnings)++;
    }
    return std::move(report_);
  }

 private:
  static std::tuple<std::size_t, std::string, std::string, std::string> sort_key(const Violation& v) {
    std::string anchor = v.node ? v.node->canonical() : v.statement ? v.statement->subject.canonical() : "";
    return {rule_rank(v.rule_id), anchor, v.statement ? to_string(*v.statement) : "", v.message};
  }

  std::string show(const Term& t) const { return to_turtle(t, prefixes_); }
  std::string show(const Iri& i) const { return to_turtle(i, prefixes_); }

  std::string show_class(const Iri& c) const {
    const ClassDef* def = ont_.find_class(c);
    return def ? show(c) + " " + def->label : show(c);
  }

  std::string show_types(const std::vector<Iri>& types) const {
    if (types.empty()) return "no type";
    std::string out;
    for (const Iri& t : types) {
      if (!out.empty()) out += ", ";
      out += show(t);
    }
    return out;
  }

  void add(Violation v, std::optional<Severity> forced = std::nullopt) {
    RuleLevel level = cfg_.level(v.rule_id);
    if (level == RuleLevel::off) return;
    v.severity = forced ? *forced : level == RuleLevel::error ? Severity::error : Severity::warning;
    if (cfg_.strict) v.severity = Severity::error;
    report_.violations.push_back(std::move(v));
  }

  void collect_types() {
    const Graph* source = &g_;
    Graph closure;
    if (cfg_.types_from_closure) {
      closure = materialize(g_, ont_, InferenceConfig::all());
      source = &closure;
    }
    for (const Statement& st : source->match(std::nullopt, type_, std::nullopt)) {
      if (!st.object.is_iri()) continue;
      Iri cls = st.object.as_iri();
      if (ont_.find_class(cls) == nullptr) continue;
      auto& list = types_[st.subject];
      if (std::find(list.begin(), list.end(), cls) == list.end()) list.push_back(cls);
    }
    for (auto& [node, list] : types_) std::sort(list.begin(), list.end());
  }

  const std::vector<Iri>& types_of(const Term& t) const {
    static const std::vector<Iri> kNone;
    auto it = types_.find(t);
    return it == types_.end() ? kNone : it->second;
  }

  bool has_type_under(const Term& t, const Iri& cls) const {
    const auto& types = types_of(t);
    return std::any_of(types.begin(), types.end(), [&](const Iri& c) { return ont_.is_subclass_of(c, cls); });
  }

  // Nodes with some registered type under `cls`, in canonical order.
  std::vector<Term> nodes_under(const Iri& cls) const {
    std::vector<Term> out;
    for (const auto& [node, types] : types_) {
      if (has_type_under(node, cls)) out.push_back(node);
    }
    return out;
  }

  // Distinct partners of `node` along `prop`, counting inverse-IRI edges
  // written the other way round.
  std::set<Term> partners(const Term& node, const PropertyDef& prop) const {
    std::set<Term> out;
    for (const Statement& st : g_.match(node, prop.id, std::nullopt)) out.insert(st.object);
    if (prop.inverse_id) {
      for (const Statement& st : g_.match(std::nullopt, *prop.inverse_id, node)) out.insert(st.subject);
    }
    return out;
  }

  // --- V1 / untyped participants ------------------------------------------

  void check_conformance() {
    for (const Statement& st : g_) {
      if (st.predicate == type_) continue;
      const PropertyDef* def = ont_.find_property(st.predicate);
      if (def == nullptr) continue;
      const bool inverse = ont_.is_inverse_property(st.predicate);
      const auto& domain = inverse ? def->range : def->domain;
      const auto& range = inverse ? def->domain : def->range;
      if (domain) check_side(st, st.subject, *domain, "domain", "subject");
      if (range) {
        if (st.object.is_literal()) {
          Violation v;
          v.rule_id = "V1";
          v.statement = st;
          v.node = st.object;
          v.message = "object of " + show(st.predicate) + " is a literal, range is " + show_class(*range);
          v.expected = show_class(*range);
          v.actual = "literal " + show(st.object);
          add(std::move(v));
        } else {
          check_side(st, st.object, *range, "range", "object");
        }
      }
    }
  }

  void check_side(const Statement& st, const Term& node, const Iri& required, const char* side,
                  const char* position) {
    const auto& types = types_of(node);
    if (types.empty()) {
      Violation v;
      v.rule_id = "V5";
      v.statement = st;
      v.node = node;
      v.message = std::string("untyped participant: ") + position + " " + show(node) + " of " +
                  show(st.predicate) + " has no registered type";
      v.expected = show_class(required);
      v.actual = "no type";
      add(std::move(v));
      return;
    }
    if (has_type_under(node, required)) return;
    Violation v;
    v.rule_id = "V1";
    v.statement = st;
    v.node = node;
    v.message = std::string(side) + " violation: " + position + " " + show(node) + " of " + show(st.predicate) +
                " is not a " + show_class(required);
    v.expected = show_class(required);
    v.actual = show_types(types);
    add(std::move(v));
  }

  // --- V2 / V3 -------------------------------------------------------------

  void check_twins() {
    if (cfg_.level("V2") == RuleLevel::off) return;
    const Iri hc1 = ont_.resolve("HC1");
    const PropertyDef& hp1 = ont_.property_def(ont_.resolve("HP1"));
    for (const Term& node : nodes_under(hc1)) {
      std::set<Term> twins = partners(node, hp1);
      if (twins.size() == 1) continue;
      Violation v;
      v.rule_id = "V2";
      v.node = node;
      v.expected = "at most one " + show(hp1.id) + " link";
      if (twins.empty()) {
        v.message = "heritage entity " + show(node) + " has no digital twin (" + show(hp1.id) + ")";
        v.actual = "0";
        add(std::move(v), Severity::warning);
      } else {
        v.message = "heritage entity " + show(node) + " has " + std::to_string(twins.size()) +
                    " digital twins (" + show(hp1.id) + "):";
        for (const Term& t : twins) v.message += " " + show(t);
        v.actual = std::to_string(twins.size());
        add(std::move(v));
      }
    }
  }

  void check_tangible() {
    if (cfg_.level("V3") == RuleLevel::off) return;
    const Iri hc3 = ont_.resolve("HC3");
    const PropertyDef& hp5 = ont_.property_def(ont_.resolve("HP5"));
    for (const Term& node : nodes_under(hc3)) {
      if (!partners(node, hp5).empty()) continue;
      Violation v;
      v.rule_id = "V3";
      v.node = node;
      v.message = "tangible aspect " + show(node) + " has no intangible aspect (" + show(hp5.id) + ")";
      v.expected = "at least one " + show(hp5.id) + " link";
      v.actual = "0";
      add(std::move(v));
    }
  }

  // --- V4 ------------------------------------------------------------------

  void check_composition() {
    if (cfg_.level("V4") == RuleLevel::off) return;
    const PropertyDef& hp3 = ont_.property_def(ont_.resolve("HP3"));
    std::map<Term, std::set<Term>> succ;
    auto edge = [&succ](const Term& from, const Term& to) {
      succ[from].insert(to);
      succ[to];
    };
    for (const Statement& st : g_.match(std::nullopt, hp3.id, std::nullopt)) {
      if (!st.object.is_literal()) edge(st.subject, st.object);
    }
    if (hp3.inverse_id) {
      for (const Statement& st : g_.match(std::nullopt, *hp3.inverse_id, std::nullopt)) {
        if (!st.object.is_literal()) edge(st.object, st.subject);
      }
    }

    for (const std::vector<Term>& component : strongly_connected(succ)) {
      const Term& first = component.front();
      const bool self_loop = succ[first].contains(first);
      if (component.size() == 1 && !self_loop) continue;
      std::set<Term> members(component.begin(), component.end());
      std::vector<Term> cycle = shortest_cycle(first, succ, members);

      Violation v;
      v.rule_id = "V4";
      v.node = first;
      v.cycle = cycle;
      std::string path;
      for (const Term& t : cycle) path += (path.empty() ? "" : " -> ") + show(t);
      v.message = "composition cycle through " + show(hp3.id) + ": " + path;
      v.expected = "acyclic " + show(hp3.id);
      v.actual = path;
      add(std::move(v));
    }
  }

  // Tarjan, iterative. Each component is sorted; components come out sorted
  // by their first member.
  static std::vector<std::vector<Term>> strongly_connected(const std::map<Term, std::set<Term>>& succ) {
    std::vector<const Term*> nodes;
    std::map<Term, std::size_t> id;
    for (const auto& [n, _] : succ) {
      id.emplace(n, nodes.size());
      nodes.push_back(&n);
    }
    const std::size_t n = nodes.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [from, tos] : succ) {
      for (const Term& to : tos) adj[id.at(from)].push_back(id.at(to));
    }

    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::size_t counter = 0;
    std::vector<std::vector<Term>> out;

    for (std::size_t root = 0; root < n; ++root) {
      if (index[root] != kUnvisited) continue;
      std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!frames.empty()) {
        auto& [v, next] = frames.back();
        if (next < adj[v].size()) {
          std::size_t w = adj[v][next++];
          if (index[w] == kUnvisited) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = true;
            frames.emplace_back(w, 0);
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        if (low[v] == index[v]) {
          std::vector<Term> component;
          std::size_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            component.push_back(*nodes[w]);
          } while (w != v);
          std::sort(component.begin(), component.end());
          out.push_back(std::move(component));
        }
        std::size_t done = v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
  }

  // Shortest cycle from `start` back to itself inside `members`; BFS visits
  // successors in canonical order, so the result is deterministic.
  static std::vector<Term> shortest_cycle(const Term& start, const std::map<Term, std::set<Term>>& succ,
                                          const std::set<Term>& members) {
    std::map<Term, Term> parent;
    std::deque<Term> queue;
    for (const Term& s : succ.at(start)) {
      if (s == start) return {start, start};
      if (members.contains(s) && parent.emplace(s, start).second) queue.push_back(s);
    }
    while (!queue.empty()) {
      Term cur = queue.front();
      queue.pop_front();
      for (const Term& s : succ.at(cur)) {
        if (s == start) {
          std::vector<Term> path{start, cur};
          for (Term t = cur; parent.at(t) != start;) {
            t = parent.at(t);
            path.push_back(t);
          }
          path.push_back(start);
          std::reverse(path.begin() + 1, path.end() - 1);
          return path;
        }
        if (members.contains(s) && !parent.contains(s)) {
          parent.emplace(s, cur);
          queue.push_back(s);
        }
      }
    }
    return {start};
  }

  // --- V5 ------------------------------------------------------------------

  void check_vocabulary() {
    const Iri valid_from = ont_.valid_from_iri();
    const Iri valid_to = ont_.valid_to_iri();
    for (const Statement& st : g_) {
      const std::string& p = st.predicate.str();
      if (st.predicate == type_) {
        if (st.object.is_literal()) {
          Violation v;
          v.rule_id = "V5";
          v.statement = st;
          v.node = st.subject;
          v.message = "rdf:type of " + show(st.subject) + " is a literal";
          v.expected = "a registered class";
          v.actual = show(st.object);
          add(std::move(v));
        } else if (st.object.is_iri() && ont_.find_class(st.object.as_iri()) == nullptr &&
                   !is_builtin_vocabulary(st.object.value())) {
          Violation v;
          v.rule_id = "V5";
          v.statement = st;
          v.node = st.subject;
          v.message = "unknown class " + show(st.object);
          v.expected = "a registered class";
          v.actual = show(st.object);
          add(std::move(v));
        }
        continue;
      }
      if (ont_.find_property(st.predicate) != nullptr || is_builtin_vocabulary(p) || st.predicate == valid_from ||
          st.predicate == valid_to) {
        continue;
      }
      Violation v;
      v.rule_id = "V5";
      v.statement = st;
      v.node = st.subject;
      v.message = "unknown predicate " + show(st.predicate);
      v.expected = "a registered property";
      v.actual = show(st.predicate);
      add(std::move(v));
    }
  }

  // --- V6 ------------------------------------------------------------------

  void check_literals() {
    for (const Iri& p : {ont_.valid_from_iri(), ont_.valid_to_iri(), p82_}) {
      for (const Statement& st : g_.match(std::nullopt, p, std::nullopt)) {
        std::string problem;
        if (!st.object.is_literal()) {
          if (p == p82_) continue;
          problem = "is not a literal";
        } else {
          try {
            parse_time_span(st.object.value());
          } catch (const ParseError& e) {
            problem = "is not ISO 8601: " + e.detail() + " at offset " + std::to_string(e.offset());
          }
        }
        if (problem.empty()) continue;
        Violation v;
        v.rule_id = "V6";
        v.statement = st;
        v.node = st.subject;
        v.message = "value " + show(st.object) + " of " + show(p) + " " + problem;
        v.expected = "ISO 8601 date, date-time or interval";
        v.actual = st.object.is_literal() ? st.object.value() : show(st.object);
        add(std::move(v));
      }
    }
  }

  const Graph& g_;
  const Ontology& ont_;
  const ValidationConfig& cfg_;
  PrefixMap prefixes_;
  Iri type_;
  Iri p82_;
  std::map<Term, std::vector<Iri>> types_;
  ValidationReport report_;
};

}  // namespace

const std::vector<std::string>& validation_rule_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const RuleInfo& r : kRules) out.emplace_back(r.id);
    return out;
  }();
  return ids;
}

std::string_view rule_summary(std::string_view rule_id) {
  const RuleInfo* r = find_rule(rule_id);
  if (r == nullptr) throw LookupError("unknown rule '" + std::string(rule_id) + "'");
  return r->summary;
}

ValidationConfig ValidationConfig::defaults() {
  ValidationConfig cfg;
  for (const RuleInfo& r : kRules) cfg.levels.emplace(r.id, r.default_level);
  return cfg;
}

RuleLevel ValidationConfig::level(std::string_view rule_id) const {
  auto it = levels.find(rule_id);
  if (it != levels.end()) return it->second;
  const RuleInfo* r = find_rule(rule_id);
  return r ? r->default_level : RuleLevel::off;
}

void ValidationConfig::set_level(std::string_view rule_id, RuleLevel level) {
  if (find_rule(rule_id) == nullptr) throw LookupError("unknown rule '" + std::string(rule_id) + "'");
  levels.insert_or_assign(std::string(rule_id), level);
}

void ValidationConfig::promote_warnings() {
  for (const RuleInfo& r : kRules) {
    if (level(r.id) == RuleLevel::warning) levels.insert_or_assign(r.id, RuleLevel::error);
  }
  strict = true;
}

void apply_severity_overrides(ValidationConfig& cfg, std::string_view overrides) {
  std::size_t pos = 0;
  while (pos <= overrides.size()) {
    std::size_t comma = overrides.find(',', pos);
    if (comma == std::string_view::npos) comma = overrides.size();
    std::string_view item = overrides.substr(pos, comma - pos);
    if (!item.empty()) {
      auto eq = item.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected RULE=LEVEL", pos);
      std::string_view rule = item.substr(0, eq);
      std::string_view level = item.substr(eq + 1);
      RuleLevel parsed;
      if (level == "error") parsed = RuleLevel::error;
      else if (level == "warning") parsed = RuleLevel::warning;
      else if (level == "off") parsed = RuleLevel::off;
      else throw ParseError("level must be error, warning or off", pos + eq + 1);
      cfg.set_level(rule, parsed);
    }
    pos = comma + 1;
  }
}

std::size_t ValidationReport::error_count() const {
  std::size_t n = 0;
  for (const auto& [rule, s] : stats) n += s.errors;
  return n;
}

std::size_t ValidationReport::warning_count() const {
  std::size_t n = 0;
  for (const auto& [rule, s] : stats) n += s.warnings;
  return n;
}

std::size_t ValidationReport::count(std::string_view rule_id, std::optional<Severity> severity) const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(), [&](const Violation& v) {
    return v.rule_id == rule_id && (!severity || v.severity == *severity);
  }));
}

ValidationReport validate(const Graph& g, const Ontology& ont, const ValidationConfig& cfg) {
  return Validator(g, ont, cfg).run();
}

std::string explain(const Violation& v, const Ontology& ont) {
  const RuleInfo* rule = find_rule(v.rule_id);
  if (rule == nullptr) throw LookupError("unknown rule '" + v.rule_id + "'");
  PrefixMap prefixes = standard_prefixes(ont);
  std::string out = v.rule_id + " (" + rule->summary + "): " + v.message + ".";

  if (v.rule_id == "V1" && v.statement) {
    const PropertyDef* def = ont.find_property(v.statement->predicate);
    if (def != nullptr) {
      auto name = [&](const std::optional<Iri>& c) {
        if (!c) return std::string("(none)");
        const ClassDef* cd = ont.find_class(*c);
        return to_turtle(*c, prefixes) + (cd ? " " + cd->label : "");
      };
      out += " " + to_turtle(def->id, prefixes) + " " + def->forward_label + " is declared with domain " +
             name(def->domain) + " and range " + name(def->range) + ".";
      if (ont.is_inverse_property(v.statement->predicate)) {
        out += " It is used here through its inverse " + to_turtle(v.statement->predicate, prefixes) + " (" +
               def->inverse_label.value_or("") + "), which swaps the two.";
      }
    }
    out += " Found: " + v.actual + ".";
  } else if (v.rule_id == "V4" && !v.cycle.empty()) {
    out += " Cycle:";
    for (std::size_t i = 0; i < v.cycle.size(); ++i) {
      out += (i == 0 ? " " : " -> ") + to_turtle(v.cycle[i], prefixes);
    }
    out += ".";
  } else if (v.node) {
    out += " Node: " + to_turtle(*v.node, prefixes) + ".";
  }
  return out;
}

namespace {

std::string optional_text(const std::optional<Term>& t, const PrefixMap& prefixes) {
  return t ? to_turtle(*t, prefixes) : "";
}

}  // namespace

std::string format_report_text(const ValidationReport& report, const Ontology& ont) {
  PrefixMap prefixes = standard_prefixes(ont);
  std::string out;
  for (const Violation& v : report.violations) {
    out += std::string(to_string(v.severity)) + " " + v.rule_id + " ";
    if (v.statement) {
      out += to_turtle(v.statement->subject, prefixes) + " " + to_turtle(v.statement->predicate, prefixes) + " " +
             to_turtle(v.statement->object, prefixes);
    } else {
      out += optional_text(v.node, prefixes);
    }
    out += ": " + v.message + "\n";
  }
  out += std::to_string(report.error_count()) + " error(s), " + std::to_string(report.warning_count()) +
         " warning(s)\n";
  return out;
}

std::string format_report_json(const ValidationReport& report, const Ontology&) {
  nlohmann::ordered_json doc;
  doc["violations"] = nlohmann::ordered_json::array();
  for (const Violation& v : report.violations) {
    nlohmann::ordered_json rec;
    rec["rule_id"] = v.rule_id;
    rec["severity"] = to_string(v.severity);
    if (v.statement) {
      rec["subject"] = v.statement->subject.canonical();
      rec["predicate"] = "<" + v.statement->predicate.str() + ">";
      rec["object"] = v.statement->object.canonical();
      if (!v.statement->validity.is_always()) rec["validity"] = format_time_span(v.statement->validity);
    } else {
      rec["subject"] = nullptr;
      rec["predicate"] = nullptr;
      rec["object"] = nullptr;
    }
    rec["node"] = v.node ? nlohmann::ordered_json(v.node->canonical()) : nlohmann::ordered_json(nullptr);
    rec["message"] = v.message;
    rec["expected"] = v.expected;
    rec["actual"] = v.actual;
    if (!v.cycle.empty()) {
      auto& cycle = rec["cycle"] = nlohmann::ordered_json::array();
      for (const Term& t : v.cycle) cycle.push_back(t.canonical());
    }
    doc["violations"].push_back(std::move(rec));
  }
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();
  for (const auto& [rule, s] : report.stats) stats[rule] = {{"error", s.errors}, {"warning", s.warnings}};
  doc["stats"] = std::move(stats);
  doc["errors"] = report.error_count();
  doc["warnings"] = report.warning_count();
  return doc.dump(2) + "\n";
}

}  // namespace hdtkg
