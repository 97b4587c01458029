"""JSON and plain-text renderings of tableaux, patterns and polynomials."""
from __future__ import annotations

import json
from typing import Any, Mapping

from .combinatorics import (
    ALPHABET_KINDS, GTPattern, OrthogonalPattern, Tableau, letter_from_str, letter_to_str,
)
from .errors import ValidityError

PATTERN_KINDS = ("gt", "king", "orthogonal")


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def tableau_to_json(T: Tableau) -> dict:
    return {
        "kind": T.kind,
        "n": T.n,
        "shape": list(T.shape),
        "rows": [[letter_to_str(a, T.kind) for a in row] for row in T.rows],
    }


def tableau_from_json(data: Mapping) -> Tableau:
    kind = data["kind"]
    if kind not in ALPHABET_KINDS:
        raise ValidityError(f"unknown tableau kind {kind!r}")
    rows = tuple(tuple(letter_from_str(s, kind) for s in row) for row in data["rows"])
    T = Tableau(kind, int(data["n"]), rows)
    if "shape" in data and [p for p in data["shape"] if p] != list(T.shape):
        raise ValidityError(f"declared shape {data['shape']} disagrees with rows {list(T.shape)}")
    return T


def pattern_to_json(P: GTPattern | OrthogonalPattern, kind: str | None = None) -> dict:
    if isinstance(P, OrthogonalPattern):
        return {"kind": "orthogonal", "rows": [list(r) for r in P.pattern.rows],
                "circled": sorted(P.circled)}
    return {"kind": kind or "gt", "rows": [list(r) for r in P.rows], "circled": []}


def pattern_from_json(data: Mapping) -> tuple[str, GTPattern | OrthogonalPattern]:
    """Parse a pattern; rows may omit trailing zeros."""
    kind = data.get("kind", "gt")
    if kind not in PATTERN_KINDS:
        raise ValidityError(f"unknown pattern kind {kind!r}")
    P = GTPattern.padded(data["rows"])
    if kind == "orthogonal":
        return kind, OrthogonalPattern(P, frozenset(data.get("circled", ())))
    if data.get("circled"):
        raise ValidityError(f"{kind} patterns carry no circles")
    return kind, P


def is_tableau_json(data: Mapping) -> bool:
    return data.get("kind") in ALPHABET_KINDS


def render_pattern(P: GTPattern | OrthogonalPattern) -> str:
    """Triangular layout, top row first; circled entries shown in parentheses."""
    circled = P.circled if isinstance(P, OrthogonalPattern) else frozenset()
    G = P.pattern if isinstance(P, OrthogonalPattern) else P
    cells = [[f"({v})" if t == 0 and i in circled else str(v) for i, v in enumerate(r, start=1)]
             for t, r in enumerate(G.rows)]
    width = max((len(c) for r in cells for c in r), default=1)
    lines = []
    for t, r in enumerate(cells):
        indent = " " * (t * (width + 1) // 2)
        lines.append(indent + " ".join(c.rjust(width) for c in r))
    return "\n".join(lines)


def render_tableau(T: Tableau) -> str:
    strs = [[letter_to_str(a, T.kind) for a in row] for row in T.rows]
    width = max((len(s) for r in strs for s in r), default=1)
    return "\n".join(" ".join(s.rjust(width) for s in r) for r in strs)
