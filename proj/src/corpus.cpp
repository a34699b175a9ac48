#include "hdtkg/corpus.hpp"

#include <initializer_list>

#include "hdtkg/vocab.hpp"

namespace hdtkg {

namespace {

class Builder {
 public:
  explicit Builder(const Ontology& ont) : ont_(ont), g_(standard_prefixes(ont)) {}

  static Term node(std::string_view local) { return Term::iri(std::string(vocab::kCorpusBase) + std::string(local)); }

  Builder& entity(std::string_view local, std::string label, std::initializer_list<std::string_view> types) {
    for (std::string_view t : types) {
      g_.insert(node(local), Iri(std::string(vocab::kRdfType)), Term::iri(ont_.resolve(t)));
    }
    g_.insert(node(local), Iri(std::string(vocab::kRdfsLabel)), Term::literal(std::move(label)));
    return *this;
  }

  Builder& link(std::string_view s, std::string_view p, std::string_view o,
                TimeSpan validity = TimeSpan::always()) {
    g_.insert(node(s), ont_.resolve(p), node(o), validity);
    return *this;
  }

  // A time-span node with its ISO 8601 value on crm:P82.
  Builder& span(std::string_view owner, std::string_view local, std::string label, std::string iso) {
    entity(local, std::move(label), {"crm:E52"});
    link(owner, "crm:P4", local);
    g_.insert(node(local), ont_.resolve("crm:P82"), Term::literal(std::move(iso)));
    return *this;
  }

  Graph take() { return std::move(g_); }

 private:
  const Ontology& ont_;
  Graph g_;
};

}  // namespace

Graph build_palio(const Ontology& ont) {
  Builder b(ont);
  b.entity("PalioDiSiena", "Palio di Siena", {"hdt:HC1", "hdt:HC4"})
      .entity("PalioDiSienaTwin", "Heritage Digital Twin of the Palio di Siena", {"hdt:HC2"})
      .link("PalioDiSiena", "hdt:HP1", "PalioDiSienaTwin")
      .entity("PiazzaDelCampo", "Piazza del Campo", {"hdt:HC3"})
      .link("PiazzaDelCampo", "hdt:HP5", "PalioDiSiena")
      .entity("Siena", "Siena, Italy", {"crm:E53"})
      .entity("PalioRace2022", "Palio di Siena race of 17 August 2022", {"crm:E5"})
      .link("PalioDiSiena", "hdt:HP6", "PalioRace2022", parse_time_span("2022-08-17"))
      .link("PalioRace2022", "crm:P7", "Siena")
      .span("PalioRace2022", "PalioRace2022Date", "17 August 2022", "2022-08-17")
      .entity("GiovanniAtzeni", "Giovanni Atzeni, winning jockey", {"crm:E39"})
      .link("PalioRace2022", "crm:P14", "GiovanniAtzeni")
      .entity("SienaContrade", "The contrade of Siena", {"crm:E74"})
      .link("PalioRace2022", "crm:P14", "SienaContrade");
  return b.take();
}

Graph build_pisa_condition(const Ontology& ont) {
  Builder b(ont);
  b.entity("PisaTowerAnalysis", "Analysis on Pisa Tower", {"crm:E14"})
      .entity("DrydenWilson", "Dryden & Wilson", {"crm:E39"})
      .link("PisaTowerAnalysis", "crm:P14", "DrydenWilson")
      .span("PisaTowerAnalysis", "PisaTowerAnalysisDate", "1997", "1997")
      .entity("CreepAnalysesPaper", "Three-Dimensional Creep Analyses of The Leaning Tower of Pisa", {"crm:E31"})
      .link("CreepAnalysesPaper", "crm:P70", "PisaTowerAnalysis");
  return b.take();
}

Graph build_cornaro_art_history(const Ontology& ont) {
  Builder b(ont);
  b.entity("CornaroPainting", "Portrait of Caterina Cornaro, Leventis Museum", {"hdt:HC1", "hdt:HC3"})
      .entity("CornaroPaintingTwin", "Heritage Digital Twin of the Cornaro portrait", {"hdt:HC2"})
      .link("CornaroPainting", "hdt:HP1", "CornaroPaintingTwin")
      // Observation of the canvas.
      .entity("CanvasPeculiarities", "Physical peculiarities of the painting", {"crmsci:S20"})
      .link("CornaroPainting", "crmsci:O8", "CanvasPeculiarities")
      .entity("CanvasCondition", "Condition of the painting canvas", {"crmsci:S9"})
      .link("CanvasPeculiarities", "crmsci:O9", "CanvasCondition")
      .entity("PastConditionBelief", "Hypothesis on past conditions and provenance", {"crminf:I2"})
      .link("CanvasCondition", "crminf:J2", "PastConditionBelief")
      // The Ridolfi book.
      .entity("RidolfiBook", "Carlo Ridolfi, Le Meraviglie dell'Arte", {"crm:E31"})
      .link("RidolfiBook", "crm:P70", "CornaroPainting")
      .entity("LostTitianAdoption", "Titian painted a now-lost portrait of Caterina Cornaro", {"crminf:I7"})
      .link("RidolfiBook", "crminf:J7", "LostTitianAdoption")
      .entity("LostTitianBelief", "This portrait could be the lost one painted by Titian", {"crminf:I2"})
      .link("LostTitianAdoption", "crminf:J2", "LostTitianBelief")
      // Both beliefs support the attribution.
      .entity("AttributionInference", "Attribution reasoning", {"crminf:I5"})
      .link("AttributionInference", "crminf:J1", "PastConditionBelief")
      .link("AttributionInference", "crminf:J1", "LostTitianBelief")
      .entity("TitianAttribution", "The painting is attributed to Titian", {"crminf:I2"})
      .link("AttributionInference", "crminf:J2", "TitianAttribution");
  return b.take();
}

Graph build_cornaro_heritage_science(const Ontology& ont) {
  Builder b(ont);
  b.entity("CornaroPainting", "Portrait of Caterina Cornaro, Leventis Museum", {"hdt:HC1", "hdt:HC3"})
      .entity("CornaroPaintingTwin", "Heritage Digital Twin of the Cornaro portrait", {"hdt:HC2"})
      .link("CornaroPainting", "hdt:HP1", "CornaroPaintingTwin")
      // Spectroscopy.
      .entity("Spectroscopy", "Spectroscopic examination of the painting", {"crmdig:D11"})
      .link("CornaroPainting", "crm:P39", "Spectroscopy")
      .entity("PigmentIdentification", "Identification of pigments", {"crm:E7"})
      .link("Spectroscopy", "crm:P17", "PigmentIdentification")
      .entity("Spectrometer", "Spectrometer", {"crmdig:D8"})
      .link("Spectroscopy", "crmdig:L12", "Spectrometer")
      .entity("SpectrometerAccessory", "Spectrometer accessory", {"crm:E19"})
      .link("Spectroscopy", "crm:P16", "SpectrometerAccessory")
      .entity("SpectroscopySoftware", "Spectrometer control software", {"crmdig:D14"})
      .link("Spectroscopy", "crmdig:L23", "SpectroscopySoftware")
      .entity("SpectroscopySettings", "Settings and environmental parameters", {"crmdig:D9"})
      .link("Spectroscopy", "crmdig:L10", "SpectroscopySettings")
      .entity("SpectroscopyResults", "Spectroscopy results", {"crmdig:D9"})
      .link("Spectroscopy", "crmdig:L20", "SpectroscopyResults")
      .entity("ResultsEvaluation", "Evaluation of the spectroscopy results", {"crmsci:S6"})
      .link("SpectroscopyResults", "crmsci:O16", "ResultsEvaluation")
      .entity("ChemicalElements", "Chemical elements used by the artist", {"crmsci:S9"})
      .link("ResultsEvaluation", "crmsci:O11", "ChemicalElements")
      .entity("RenaissanceBelief", "The pigments are characteristic of the Renaissance", {"crminf:I2"})
      .link("ChemicalElements", "crminf:J2", "RenaissanceBelief")
      // X-ray imaging.
      .entity("XrayImaging", "X-ray imaging of the painting", {"crmdig:D2"})
      .link("CornaroPainting", "crmdig:L1", "XrayImaging")
      .entity("XrayImage", "X-ray image of the painting", {"hdt:HC7"})
      .link("XrayImaging", "crmdig:L11", "XrayImage")
      .link("CornaroPainting", "hdt:HP9", "XrayImage")
      .entity("BrightAreas", "Bright areas on the painting", {"crmsci:S20"})
      .link("XrayImage", "crmsci:O8", "BrightAreas")
      .entity("BrightAreaProperty", "Radiopacity of the bright areas", {"crmsci:S9"})
      .link("BrightAreas", "crmsci:O9", "BrightAreaProperty")
      .entity("HeavyElementsBelief", "Pigments composed of heavy elements were used", {"crminf:I2"})
      .link("BrightAreaProperty", "crminf:J2", "HeavyElementsBelief")
      // Attribution.
      .entity("ScienceAttribution", "Attribution reasoning from scientific results", {"crminf:I5"})
      .link("ScienceAttribution", "crminf:J1", "RenaissanceBelief")
      .link("ScienceAttribution", "crminf:J1", "HeavyElementsBelief")
      .entity("TitianAuthorship", "The painting is by Titian", {"crminf:I2"})
      .link("ScienceAttribution", "crminf:J2", "TitianAuthorship");
  return b.take();
}

Graph build_lampadistis(const Ontology& ont) {
  Builder b(ont);
  b.entity("LampadistisMonastery", "Monastery of St. John Lampadistis, Kalopanayotis", {"hdt:HC1", "hdt:HC3"})
      .entity("LampadistisTwin", "Heritage Digital Twin of the Lampadistis monastery", {"hdt:HC2"})
      .link("LampadistisMonastery", "hdt:HP1", "LampadistisTwin")
      // Buildings, sections and their production.
      .entity("Katholicon", "Katholicon of St. Herakleidios", {"crmba:B1"})
      .link("LampadistisMonastery", "crm:P46", "Katholicon")
      .entity("LatinChapel", "Latin Chapel", {"crmba:B2"})
      .link("Katholicon", "crmba:BP1", "LatinChapel")
      .entity("LatinChapelConstruction", "Construction of the Latin Chapel", {"crm:E12"})
      .link("LatinChapel", "crm:P108", "LatinChapelConstruction")
      .span("LatinChapelConstruction", "LatinChapelConstructionDate", "15th century", "1401/1500")
      .entity("LatinChapelFrescoes", "Frescoes of the Latin Chapel", {"crm:E26"})
      .link("LatinChapel", "crm:P56", "LatinChapelFrescoes")
      .entity("LatinChapelFrescoPainting", "Painting of the Latin Chapel frescoes", {"crm:E12"})
      .link("LatinChapelFrescoes", "crm:P108", "LatinChapelFrescoPainting")
      .span("LatinChapelFrescoPainting", "LatinChapelFrescoPaintingDate", "15th century", "1401/1500")
      // Digital representation.
      .entity("Lampadistis3DModel", "3D model of the monastery", {"hdt:HC8"})
      .link("LampadistisMonastery", "crm:P129", "Lampadistis3DModel")
      // Intangible aspects.
      .entity("LampadistisHistory", "History of the monastery", {"hdt:HC4"})
      .link("LampadistisMonastery", "hdt:HP5", "LampadistisHistory")
      .entity("LifeOfStJohn", "The life of St. John Lampadistis", {"nont:Narrative"})
      .link("LampadistisHistory", "hdt:HP2", "LifeOfStJohn")
      .entity("SavvasNarration", "Narration of the life of St. John by the priest Savvas", {"nont:Narration"})
      .link("SavvasNarration", "hdt:HP4", "LifeOfStJohn")
      .entity("SavvasManuscript", "Manuscript of Savvas (1640)", {"crm:E31"})
      .link("SavvasNarration", "hdt:HP8", "SavvasManuscript")
      .entity("SavvasCodex", "Physical copy of the Savvas manuscript", {"crm:E18"})
      .link("SavvasManuscript", "crm:P128", "SavvasCodex")
      .entity("SavvasCodexLost", "Lost", {"crm:E34"})
      .link("SavvasCodex", "crm:P44", "SavvasCodexLost")
      // Karamanlika graffiti.
      .entity("KaramanlikaGraffiti", "Graffiti of the Karamanlika pilgrims", {"crm:E26"})
      .link("Katholicon", "crm:P56", "KaramanlikaGraffiti", parse_time_span("1749/1880"))
      .span("KaramanlikaGraffiti", "KaramanlikaGraffitiDate", "18th century", "1701/1800~")
      .entity("KaramanlikaGraffitiImage", "Image of the Karamanlika graffiti", {"crm:E36"})
      .link("KaramanlikaGraffiti", "crm:P138", "KaramanlikaGraffitiImage");
  return b.take();
}

Graph build_digitization_path(const Ontology& ont) {
  Builder b(ont);
  b.entity("NeptuneFountain", "Neptune Fountain, Bologna", {"hdt:HC1", "hdt:HC3"})
      .entity("NeptuneFountainTwin", "Heritage Digital Twin of the Neptune Fountain", {"hdt:HC2"})
      .link("NeptuneFountain", "hdt:HP1", "NeptuneFountainTwin")
      .entity("NeptuneFountainScan", "3D acquisition of the Neptune Fountain", {"crmdig:D2"})
      .link("NeptuneFountain", "crmdig:L1", "NeptuneFountainScan")
      .entity("NeptuneFountainModel", "3D model of the Neptune Fountain", {"hdt:HC8"})
      .link("NeptuneFountainScan", "crmdig:L11", "NeptuneFountainModel");
  return b.take();
}

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = {
      {"palio", &build_palio, 25, 0},
      {"pisa", &build_pisa_condition, 12, 0},
      {"cornaro-art", &build_cornaro_art_history, 31, 0},
      {"cornaro-science", &build_cornaro_heritage_science, 59, 0},
      {"lampadistis", &build_lampadistis, 60, 0},
      {"digitization-path", &build_digitization_path, 12, 0},
  };
  return entries;
}

const CorpusEntry* find_corpus(std::string_view name) {
  for (const CorpusEntry& e : corpus_entries()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace hdtkg
