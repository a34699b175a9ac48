#pragma once

#include <string>
#include <vector>

#include "hdtkg/ontology.hpp"

namespace hdtkg::testing {

// One row per declaration of the HDT schema: a label, a subclass link, a
// domain, a range, an inverse label or a subproperty link.
struct SchemaRow {
  std::string kind;  // label | subclass | domain | range | inverse | subproperty
  std::string subject;
  std::string value;
};

const std::vector<SchemaRow>& hdt_schema_rows();

struct RowResult {
  bool ok;
  std::string detail;
};

RowResult check_row(const SchemaRow& row, const Ontology& ont);

}  // namespace hdtkg::testing
