#pragma once

#include "hdtkg/graph.hpp"
#include "hdtkg/ontology.hpp"

namespace hdtkg {

/// Rule switches. R1 supertypes, R2 superproperties, R3 types from declared
/// domain/range, R4 inverse edges.
struct InferenceConfig {
  bool infer_types_from_domain_range = false;
  bool materialize_inverses = true;
  bool materialize_superproperties = true;
  bool materialize_supertypes = true;

  static InferenceConfig all() { return {true, true, true, true}; }
  static InferenceConfig none() { return {false, false, false, false}; }
  bool any() const noexcept {
    return infer_types_from_domain_range || materialize_inverses || materialize_superproperties ||
           materialize_supertypes;
  }
};

/// Closure of `g` under the enabled rules:
///   R1  x rdf:type C, C ⊑ D             =>  x rdf:type D
///   R2  x p y, p ⊑ q                    =>  x q y
///   R3  x p y, p has domain D, range R  =>  x rdf:type D, y rdf:type R
///   R4  x p y, p has inverse p'         =>  y p' x   (and back)
/// Every inferred statement carries the validity of the statement it came
/// from. Literal objects never become subjects.
Graph materialize(const Graph& g, const Ontology& ont, const InferenceConfig& cfg = {});

// Whether s/p/o of `st` holds in the closure, under any validity.
bool entails(const Graph& g, const Ontology& ont, const Statement& st, const InferenceConfig& cfg = {});

}  // namespace hdtkg
