"""Heritage Digital Twin knowledge graph engine."""

from ._hdtkg import (
    Error,
    Graph,
    LookupError,
    ParseError,
    corpus,
    corpus_names,
    export_ontology,
    hdt_classes,
    is_subclass_of,
    is_subproperty_of,
    materialize,
    parse_ntriples,
    parse_turtle,
    query,
    serialize_ntriples,
    serialize_turtle,
    validate,
)

__all__ = [
    "Error",
    "Graph",
    "LookupError",
    "ParseError",
    "corpus",
    "corpus_names",
    "export_ontology",
    "hdt_classes",
    "is_subclass_of",
    "is_subproperty_of",
    "materialize",
    "parse_ntriples",
    "parse_turtle",
    "query",
    "serialize_ntriples",
    "serialize_turtle",
    "validate",
]
