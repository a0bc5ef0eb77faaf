"""JSON graph documents.

Rationals travel as strings ("a/b" or "a") so no floating point can leak
into the data path.  A document looks like::

    {
      "rank": 2,
      "valence": 3,
      "vertices": [{"id": "A", "mu": ["0", "0"]}, ...],
      "edges": [{"from": "A", "to": "B", "weight": ["1", "0"]}, ...],
      "xi": ["1", "3"]          // optional
    }

Edge weights are read from the "from" endpoint.  Loading validates the
graph; schema problems raise ParseError with the offending path, axiom
failures raise ValidationError carrying the full report.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .errors import ParseError, ValidationError
from .graph import Edge, GkmGraph, Vertex
from .polynomial import Vector

_RATIONAL = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(value, where: str) -> Fraction:
    """Parse "a/b" / "a" strings (or JSON integers) into an exact rational."""
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected a rational string, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ParseError(f"{where}: floating-point numbers are not accepted; use strings")
    if not isinstance(value, str):
        raise ParseError(f"{where}: expected a rational string, got {type(value).__name__}")
    match = _RATIONAL.match(value.strip())
    if not match:
        raise ParseError(f"{where}: malformed rational {value!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise ParseError(f"{where}: zero denominator in {value!r}")
    return Fraction(numerator, denominator)


def parse_vector(value, rank: int, where: str) -> Vector:
    if not isinstance(value, list):
        raise ParseError(f"{where}: expected a list of rational strings")
    if len(value) != rank:
        raise ParseError(f"{where}: expected {rank} components, got {len(value)}")
    return Vector(tuple(parse_rational(v, f"{where}[{i}]") for i, v in enumerate(value)))


def document_to_graph(doc: dict) -> tuple[GkmGraph, Optional[Vector]]:
    """Parse a document dict; returns the graph and the optional covector.

    Does not validate the GKM axioms; see load_graph for the validating
    entry point.
    """
    if not isinstance(doc, dict):
        raise ParseError("document root must be an object")
    for key in ("rank", "valence", "vertices", "edges"):
        if key not in doc:
            raise ParseError(f"missing required key {key!r}")
    rank = doc["rank"]
    valence = doc["valence"]
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
        raise ParseError("rank: expected a positive integer")
    if not isinstance(valence, int) or isinstance(valence, bool) or valence < 0:
        raise ParseError("valence: expected a non-negative integer")
    if not isinstance(doc["vertices"], list):
        raise ParseError("vertices: expected a list")
    if not isinstance(doc["edges"], list):
        raise ParseError("edges: expected a list")

    vertices = []
    for i, entry in enumerate(doc["vertices"]):
        where = f"vertices[{i}]"
        if not isinstance(entry, dict) or "id" not in entry or "mu" not in entry:
            raise ParseError(f"{where}: expected an object with 'id' and 'mu'")
        vid = entry["id"]
        if not isinstance(vid, str) or not vid:
            raise ParseError(f"{where}.id: expected a non-empty string")
        vertices.append(Vertex(vid, parse_vector(entry["mu"], rank, f"{where}.mu")))

    edges = []
    for i, entry in enumerate(doc["edges"]):
        where = f"edges[{i}]"
        if not isinstance(entry, dict) or not {"from", "to", "weight"} <= set(entry):
            raise ParseError(f"{where}: expected an object with 'from', 'to', 'weight'")
        if not isinstance(entry["from"], str) or not isinstance(entry["to"], str):
            raise ParseError(f"{where}: endpoints must be strings")
        weight = parse_vector(entry["weight"], rank, f"{where}.weight")
        edges.append(Edge(entry["from"], entry["to"], weight))

    xi = None
    if "xi" in doc and doc["xi"] is not None:
        xi = parse_vector(doc["xi"], rank, "xi")

    try:
        graph = GkmGraph(rank, valence, vertices, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return graph, xi


def loads(text: str) -> tuple[GkmGraph, Optional[Vector]]:
    """Parse and validate a JSON document string."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    graph, xi = document_to_graph(doc)
    report = graph.validate()
    if not report.ok:
        raise ValidationError(report)
    return graph, xi


def load_graph(path) -> tuple[GkmGraph, Optional[Vector]]:
    """Load and validate a graph document from a file path."""
    text = Path(path).read_text(encoding="utf-8")
    return loads(text)


def graph_to_document(graph: GkmGraph, xi: Optional[Vector] = None) -> dict:
    """Serialize back to the document shape (rationals as strings)."""
    doc = {
        "rank": graph.rank,
        "valence": graph.valence,
        "vertices": [
            {"id": v.id, "mu": [str(c) for c in v.mu]} for v in graph.vertices
        ],
        "edges": [
            {"from": e.first, "to": e.second, "weight": [str(c) for c in e.weight]}
            for e in graph.edges
        ],
    }
    if xi is not None:
        doc["xi"] = [str(c) for c in xi]
    return doc


def dumps(graph: GkmGraph, xi: Optional[Vector] = None) -> str:
    return json.dumps(graph_to_document(graph, xi), indent=2) + "\n"
