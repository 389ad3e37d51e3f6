"""Plain-text and JSON encodings of super interval matrices.

Text layout::

    # optional comments
    domain: z12
    8 4 2 | 6 9
    ---
    1 0 3 | 2 2

``|`` between entries marks a column cut and a line of dashes marks a row
cut.  The canonical render separates tokens by single spaces.
"""

from __future__ import annotations

import json
import re
import sys
from fractions import Fraction

from .domains import parse_domain
from .errors import BadEndpoint, InconsistentCuts, InvalidEndpoint, ParseError
from .matrix import SuperIntervalMatrix
from .partition import PartitionSpec

_HEADER = re.compile(r"^\s*domain\s*:\s*(\S+)\s*$", re.IGNORECASE)
_RULE = re.compile(r"^\s*-{3,}\s*$")
_TOKEN = re.compile(r"\||[^\s|]+")


def parse_matrix(text: str) -> SuperIntervalMatrix:
    domain = None
    rows: list = []
    col_cuts = None
    row_cuts: list = []
    pending_rule = None  # line number of a row cut not yet followed by a row

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if domain is None:
            m = _HEADER.match(line)
            if not m:
                raise ParseError("expected a 'domain: <tag>' header", lineno, 1)
            try:
                domain = parse_domain(m.group(1))
            except ValueError as exc:
                raise ParseError(str(exc), lineno, line.index(m.group(1)) + 1) from None
            continue
        if _RULE.match(line):
            if not rows:
                raise ParseError("row cut before the first row", lineno, 1)
            if pending_rule is not None:
                raise ParseError("two row cuts with no row between them", lineno, 1)
            pending_rule = lineno
            continue

        values, cuts = [], []
        prev_bar = None
        for m in _TOKEN.finditer(line):
            tok, col = m.group(0), m.start() + 1
            if tok == "|":
                if not values or prev_bar == len(values):
                    raise ParseError("column cut must sit between two entries", lineno, col)
                cuts.append(len(values))
                prev_bar = len(values)
                continue
            try:
                values.append(domain.parse_value(tok))
            except InvalidEndpoint as exc:
                raise BadEndpoint(str(exc), lineno, col) from None
        if prev_bar is not None and prev_bar == len(values):
            raise ParseError("column cut must sit between two entries", lineno, line.rindex("|") + 1)

        if rows and len(values) != len(rows[0]):
            raise ParseError(f"row has {len(values)} entries, expected {len(rows[0])}", lineno, 1)
        if col_cuts is None:
            col_cuts = cuts
        elif cuts != col_cuts:
            raise InconsistentCuts(f"column cuts {cuts} differ from {col_cuts} on the first row", lineno, 1)
        if pending_rule is not None:
            row_cuts.append(len(rows))
            pending_rule = None
        rows.append(tuple(values))

    if domain is None:
        raise ParseError("missing 'domain: <tag>' header", 1, 1)
    if not rows:
        raise ParseError("no matrix rows", None, None)
    if pending_rule is not None:
        raise ParseError("row cut after the last row", pending_rule, 1)
    p = PartitionSpec(len(rows), len(rows[0]), row_cuts, col_cuts)
    return SuperIntervalMatrix(domain, p, tuple(rows))


def render_text(a: SuperIntervalMatrix, decimals: bool = False) -> str:
    fmt = a.domain.format_value
    cuts = set(a.col_cuts)
    lines = [f"domain: {a.domain.tag}"]
    for i, row in enumerate(a.endpoints):
        if i in a.row_cuts:
            lines.append("---")
        toks = []
        for j, v in enumerate(row):
            if j in cuts:
                toks.append("|")
            toks.append(fmt(v, decimals))
        lines.append(" ".join(toks))
    return "\n".join(lines)


def _json_value(a: SuperIntervalMatrix, v, decimals: bool):
    if a.domain.integral:
        return v
    v = Fraction(v)
    if v.denominator == 1:
        return v.numerator
    return a.domain.format_value(v, decimals)


def to_json_obj(a: SuperIntervalMatrix, decimals: bool = False) -> dict:
    return {
        "domain": a.domain.tag,
        "dims": [a.rows, a.cols],
        "row_cuts": list(a.row_cuts),
        "col_cuts": list(a.col_cuts),
        "endpoints": [[_json_value(a, v, decimals) for v in row] for row in a.endpoints],
    }


def from_json_obj(obj: dict) -> SuperIntervalMatrix:
    from .matrix import build

    domain = parse_domain(obj["domain"])
    m, n = obj["dims"]
    p = PartitionSpec(m, n, obj.get("row_cuts", ()), obj.get("col_cuts", ()))
    grid = [[str(v) if not isinstance(v, str) else v for v in row] for row in obj["endpoints"]]
    return build(domain, p, grid)


def render_matrix(a: SuperIntervalMatrix, format: str = "text", decimals: bool = False) -> str:
    if format == "text":
        return render_text(a, decimals)
    if format == "json":
        return json.dumps(to_json_obj(a, decimals), sort_keys=True)
    raise ValueError(f"unknown format {format!r}")


def read_matrix(path) -> SuperIntervalMatrix:
    """Read a matrix file; ``-`` reads standard input."""
    if str(path) == "-":
        return parse_matrix(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())
