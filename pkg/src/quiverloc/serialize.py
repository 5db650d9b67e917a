"""JSON formats for quivers, dimension vectors and representations."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .linalg import parse_field
from .quiver import Quiver, QuiverError
from .representations import Representation


def quiver_from_dict(data: dict[str, Any]) -> Quiver:
    try:
        vertices = [str(v) for v in data["vertices"]]
        arrows = [(str(a["id"]), str(a["src"]), str(a["tgt"])) for a in data["arrows"]]
    except (KeyError, TypeError) as exc:
        raise QuiverError(f"malformed quiver JSON: missing or invalid {exc}") from None
    for label, s, t in arrows:
        for v, role in ((s, "src"), (t, "tgt")):
            if v not in vertices:
                raise QuiverError(f"arrow {label!r}: {role} {v!r} is not a declared vertex")
    return Quiver.build(vertices, arrows)


def quiver_to_dict(Q: Quiver) -> dict[str, Any]:
    return {
        "vertices": list(Q.vertex_labels),
        "arrows": [
            {"id": a.label, "src": Q.vertex_labels[a.source], "tgt": Q.vertex_labels[a.target]}
            for a in Q.arrows
        ],
    }


def load_quiver(path: str | Path) -> Quiver:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise QuiverError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from None
    return quiver_from_dict(data)


def parse_dimvec(Q: Quiver, text: str) -> tuple[int, ...]:
    """``"4"``, ``"1,1,2"`` in vertex order, or ``"i=1,j=2"`` by label."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        if parts and all("=" in p for p in parts):
            return Q.dimvec({k.strip(): int(v) for k, v in (p.split("=", 1) for p in parts)})
        return Q.dimvec([int(p) for p in parts])
    except ValueError as exc:
        if isinstance(exc, QuiverError):
            raise
        raise QuiverError(f"cannot parse dimension vector {text!r}") from None


def _entry(x) -> str:
    return str(Fraction(x))


def representation_to_dict(X: Representation) -> dict[str, Any]:
    Q = X.quiver
    return {
        "field": X.field.name,
        "quiver": quiver_to_dict(Q),
        "dimension": {v: n for v, n in zip(Q.vertex_labels, X.dim)},
        "matrices": {
            a.label: [[_entry(x) for x in row] for row in M.tolist()] for a, M in zip(Q.arrows, X.maps)
        },
    }


def representation_from_dict(data: dict[str, Any]) -> Representation:
    try:
        field = parse_field(data.get("field", "Q"))
        Q = quiver_from_dict(data["quiver"])
        d = Q.dimvec(data["dimension"])
        mats = data.get("matrices", {})
    except KeyError as exc:
        raise QuiverError(f"malformed representation JSON: missing {exc}") from None
    for label in mats:
        Q.arrow_index(label)
    parsed = {}
    for label, rows in mats.items():
        a = Q.arrows[Q.arrow_index(label)]
        shape = (d[a.target], d[a.source])
        if len(rows) != shape[0] or any(len(r) != shape[1] for r in rows):
            raise QuiverError(f"matrix {label!r} should be {shape[0]}x{shape[1]}")
        parsed[label] = [[Fraction(x) for x in r] for r in rows]
    return Representation.from_matrices(Q, d, parsed, field)


def load_representation(path: str | Path) -> Representation:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise QuiverError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from None
    return representation_from_dict(data)
