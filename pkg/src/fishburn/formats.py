"""Text and JSON forms of permutations, sequences and matrices.

Text: ``"8 5 2 3 1 6 4 7"``, ``"0 1 1 0 2 1 0 3"``, ``"1 1; 0 1"``.
JSON: integer arrays, matrices as arrays of rows.
"""

from __future__ import annotations

import json

from .objects import (
    FishburnError,
    check_ascent_sequence,
    check_fishburn_matrix,
    check_permutation,
)

KINDS = ("perm", "seq", "matrix")


class ParseError(FishburnError):
    pass


def _ints(text: str, what: str) -> list[int]:
    out = []
    for pos, tok in enumerate(text.replace(",", " ").split(), 1):
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"{what}: token {pos} {tok!r} is not an integer") from None
    return out


def parse_perm(text: str) -> tuple[int, ...]:
    vals = _ints(text, "permutation")
    if not vals:
        raise ParseError("permutation: empty input")
    seen = set()
    n = len(vals)
    for pos, v in enumerate(vals, 1):
        if not 1 <= v <= n or v in seen:
            raise ParseError(f"permutation: token {pos} {v!r} is out of 1..{n} "
                             f"or repeated")
        seen.add(v)
    return tuple(vals)


def parse_seq(text: str) -> tuple[int, ...]:
    vals = _ints(text, "ascent sequence")
    if not vals:
        raise ParseError("ascent sequence: empty input")
    try:
        return check_ascent_sequence(vals)
    except FishburnError as e:
        raise ParseError(str(e)) from None


def parse_matrix(text: str) -> tuple[tuple[int, ...], ...]:
    rows = [r for r in text.split(";")]
    if rows and not rows[-1].strip():
        rows.pop()
    grid = []
    for i, r in enumerate(rows, 1):
        row = _ints(r, f"matrix row {i}")
        if not row:
            raise ParseError(f"matrix: row {i} is empty")
        grid.append(row)
    if not grid:
        raise ParseError("matrix: empty input")
    k = len(grid)
    for i, row in enumerate(grid, 1):
        if len(row) != k:
            raise ParseError(f"matrix: row {i} has {len(row)} entries, expected {k}")
        for j, v in enumerate(row, 1):
            if v < 0:
                raise ParseError(f"matrix: entry ({i},{j}) = {v} is negative")
            if i > j and v:
                raise ParseError(f"matrix: entry ({i},{j}) = {v} below the diagonal")
    for i, row in enumerate(grid, 1):
        if not any(row):
            raise ParseError(f"matrix: row {i} is zero")
    for j in range(k):
        if not any(grid[i][j] for i in range(k)):
            raise ParseError(f"matrix: column {j + 1} is zero")
    return check_fishburn_matrix(grid)


PARSERS = {"perm": parse_perm, "seq": parse_seq, "matrix": parse_matrix}


def parse(kind: str, text: str):
    """Parse ``text`` as ``kind``; text that starts with ``[`` is read as JSON."""
    if kind not in PARSERS:
        raise ParseError(f"unknown kind {kind!r}; choose from {list(KINDS)}")
    if text.lstrip().startswith("["):
        return from_json(kind, json.loads(text))
    return PARSERS[kind](text)


def format_text(kind: str, obj) -> str:
    if kind == "matrix":
        return "; ".join(" ".join(map(str, row)) for row in obj)
    return " ".join(map(str, obj))


def to_json(kind: str, obj):
    if kind == "matrix":
        return [list(row) for row in obj]
    return list(obj)


def from_json(kind: str, data):
    try:
        if kind == "matrix":
            if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
                raise ParseError("matrix JSON must be an array of row arrays")
            return parse_matrix("; ".join(" ".join(map(str, r)) for r in data))
        if not isinstance(data, list):
            raise ParseError(f"{kind} JSON must be an integer array")
        text = " ".join(map(str, data))
    except TypeError:
        raise ParseError(f"malformed {kind} JSON: {data!r}") from None
    if kind == "perm":
        return check_permutation(parse_perm(text))
    return parse_seq(text)
