"""JSON documents: matroid input, result output, and the bundled fixture corpus.

Rationals are always written as strings ``"p/q"`` in lowest terms (integers as
``"p"``), never as JSON numbers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Any

from .critical import CriticalPoint
from .errors import InputError, ParseError
from .invariants import FlagOfFlats
from .matroid import Matroid, from_bases, graphic, uniform
from .partitions import SetPartition, SignedPath

DOC_TYPES = ("bases", "uniform", "graphic")


@dataclass
class MatroidInput:
    """A parsed matroid document.

    ``matroid`` uses the document's own element order; ``labels[i]`` is the
    user-facing name of element ``i`` and ``special`` is an element index.
    """

    matroid: Matroid
    special: int
    labels: list
    document: dict


def _require(doc: dict, key: str, kind):
    if key not in doc:
        raise ParseError(f"missing field {key!r}")
    value = doc[key]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise ParseError(f"field {key!r} must be an integer")
    if kind is list and not isinstance(value, list):
        raise ParseError(f"field {key!r} must be a list")
    return value


def parse_matroid_document(doc: Any) -> MatroidInput:
    if not isinstance(doc, dict):
        raise ParseError("a matroid document must be a JSON object")
    kind = doc.get("type")
    if kind not in DOC_TYPES:
        raise ParseError(f"type must be one of {DOC_TYPES}, got {kind!r}")
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(set(map(json.dumps, labels))) != len(labels):
            raise ParseError("labels must be a list of distinct values")
        index = {json.dumps(lab): i for i, lab in enumerate(labels)}

        def element(v):
            key = json.dumps(v)
            if key not in index:
                raise ParseError(f"unknown element label {v!r}")
            return index[key]
    else:

        def element(v):
            if isinstance(v, bool) or not isinstance(v, int):
                raise ParseError(f"element {v!r} must be an integer index")
            return v

    try:
        if kind == "bases":
            n = _require(doc, "n", int)
            bases = _require(doc, "bases", list)
            if not all(isinstance(b, list) for b in bases):
                raise ParseError("bases must be a list of lists")
            M = from_bases(n, [[element(v) for v in b] for b in bases])
        elif kind == "uniform":
            M = uniform(_require(doc, "r", int), _require(doc, "n", int))
        else:
            vertices = _require(doc, "vertices", int)
            edges = _require(doc, "edges", list)
            if not all(isinstance(e, list) and len(e) == 2 for e in edges):
                raise ParseError("edges must be a list of vertex pairs")
            M = graphic(vertices, [tuple(e) for e in edges])
    except ParseError:
        raise
    except InputError as exc:
        raise ParseError(f"{type(exc).__name__}: {exc}") from exc
    if labels is None:
        labels = list(range(M.size))
    elif len(labels) != M.size:
        raise ParseError(f"expected {M.size} labels, got {len(labels)}")
    special = element(doc.get("special_element", labels[0] if doc.get("labels") else 0))
    if not 0 <= special < M.size:
        raise ParseError(f"special element {special} is outside the ground set")
    return MatroidInput(M, special, labels, doc)


def load_matroid_file(path) -> MatroidInput:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not valid JSON ({exc})") from exc
    return parse_matroid_document(doc)


# -- rationals and points -----------------------------------------------------

def rational_to_str(q) -> str:
    return str(Fraction(q))


def rational_from_str(s: str) -> Fraction:
    if not isinstance(s, str):
        raise ParseError(f"rational {s!r} must be a string")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {s!r}") from exc


def parse_weights(text: str) -> tuple[Fraction, ...]:
    """Read ``"1,10,100"`` (entries may be ``p/q``)."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise ParseError("empty weight vector")
    return tuple(rational_from_str(p) for p in parts)


def _sets(sets) -> list[list[int]]:
    return [sorted(s) for s in sets]


def point_to_json(p: CriticalPoint) -> dict:
    out = {
        "basis": sorted(p.basis),
        "x": [rational_to_str(v) for v in p.x],
        "y": [rational_to_str(v) for v in p.y],
        "w": [rational_to_str(v) for v in p.w],
        "flag": _sets(p.flag.flats),
        "coflag": _sets(p.coflag.flats),
        "pi": _sets(p.pi.blocks),
        "pi_perp": _sets(p.pi_perp.blocks),
    }
    if p.solution is not None:
        out["x_paths"] = [
            {"block": sorted(b), "path": list(sp.labels), "formula": str(sp)}
            for b, sp in sorted(p.solution.x_paths.items(), key=lambda kv: min(kv[0]))
        ]
        out["y_paths"] = [
            {"block": sorted(b), "path": list(sp.labels), "formula": str(sp)}
            for b, sp in sorted(p.solution.y_paths.items(), key=lambda kv: min(kv[0]))
        ]
    return out


def point_from_json(d: dict) -> CriticalPoint:
    try:
        return CriticalPoint(
            basis=frozenset(d["basis"]),
            flag=FlagOfFlats(tuple(frozenset(f) for f in d["flag"])),
            coflag=FlagOfFlats(tuple(frozenset(f) for f in d["coflag"])),
            pi=SetPartition(d["pi"]),
            pi_perp=SetPartition(d["pi_perp"]),
            x=tuple(rational_from_str(v) for v in d["x"]),
            y=tuple(rational_from_str(v) for v in d["y"]),
            w=tuple(rational_from_str(v) for v in d["w"]),
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed critical point: {exc}") from exc


def paths_from_json(entries: list[dict]) -> dict[frozenset[int], SignedPath]:
    return {frozenset(e["block"]): SignedPath(tuple(e["path"])) for e in entries}


def result_schema() -> dict:
    text = resources.files("tropcrit").joinpath("schemas/result.schema.json").read_text("utf-8")
    return json.loads(text)


# -- bundled corpus -------------------------------------------------------------

@dataclass
class CorpusEntry:
    name: str
    parsed: MatroidInput
    expected: dict

    @property
    def matroid(self) -> Matroid:
        return self.parsed.matroid


def fixture_names() -> list[str]:
    root = resources.files("tropcrit").joinpath("fixtures")
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_fixture(name: str) -> CorpusEntry:
    root = resources.files("tropcrit").joinpath("fixtures")
    doc = json.loads(root.joinpath(f"{name}.json").read_text("utf-8"))
    return CorpusEntry(name, parse_matroid_document(doc), doc.get("expected", {}))


def load_corpus(max_size: int | None = None) -> list[CorpusEntry]:
    """Bundled fixtures, optionally only those with at most ``max_size`` elements."""
    entries = [load_fixture(name) for name in fixture_names()]
    if max_size is not None:
        entries = [e for e in entries if e.matroid.size <= max_size]
    return entries
