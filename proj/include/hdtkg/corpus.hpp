#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hdtkg/graph.hpp"
#include "hdtkg/ontology.hpp"

namespace hdtkg {

// Individuals are minted under vocab::kCorpusBase (prefix `hdtx`).

// The Palio di Siena and its 17 August 2022 race.
Graph build_palio(const Ontology& ont = builtin_ontology());
// The 1997 creep analysis of the Pisa tower, carried out by Dryden & Wilson.
Graph build_pisa_condition(const Ontology& ont = builtin_ontology());
// Cornaro portrait, art-history chain: canvas observation and the Ridolfi
// book lead to two beliefs that support the attribution to Titian.
Graph build_cornaro_art_history(const Ontology& ont = builtin_ontology());
// Cornaro portrait, heritage-science chain: spectroscopy and x-ray imaging.
Graph build_cornaro_heritage_science(const Ontology& ont = builtin_ontology());
// St. John Lampadistis monastery: buildings, sections, frescoes, the life of
// the saint and the Karamanlika graffiti.
Graph build_lampadistis(const Ontology& ont = builtin_ontology());
// A heritage entity reaching its 3D model through crmdig:L1/crmdig:L11.
Graph build_digitization_path(const Ontology& ont = builtin_ontology());

struct CorpusEntry {
  std::string name;
  Graph (*builder)(const Ontology&);
  std::size_t expected_statement_count;
  std::size_t expected_error_count;
};

const std::vector<CorpusEntry>& corpus_entries();
// nullptr for an unknown name.
const CorpusEntry* find_corpus(std::string_view name);

}  // namespace hdtkg
