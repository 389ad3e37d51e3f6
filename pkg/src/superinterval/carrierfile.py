"""TOML carrier descriptions for the command line.

Example::

    domain = "z12"
    dims = [1, 5]
    col_cuts = [3]
    op = "hadamard"
    pool = [0, 1, 4, 9]              # optional
    pattern = [[1, 1, 1, 2, 2]]      # optional label grid, 0 pins a zero
    seeds = ["8 4 2 | 6 9"]          # optional matrices, rows split by ';'
    generators = ["1 1 1 | 0 0"]     # for ideal / span / basis

    [action]
    kind = "type-I"
    scalars = [0, 1, 2]

    [[parts]]                        # for direct-sum
    generators = ["1 0 0 | 0 0"]

    [map]                            # for linear-map
    dims = [1, 5]
    col_cuts = [3]
    rule = [["2*a1", "a2", "a3", "a5", "a4"]]

    [eta]                            # for audit-eta
    rule = "reciprocal"
    eta_zero = "1"

Matrix strings use the matrix text format without the header line; ``;``
may separate rows.  Map rules give each target entry as a sum of terms
``c*aK``, ``aK`` or a constant ``c``, where ``aK`` is the K-th source
endpoint in row-major order (1-based).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .domains import ScalarDomain, parse_domain
from .errors import ParseError
from .fuzzy import EtaMap
from .lab.carrier import CarrierSpec, ScalarActionSpec
from .matrix import SuperIntervalMatrix
from .partition import PartitionSpec
from .textio import parse_matrix


@dataclass
class CarrierFile:
    carrier: CarrierSpec
    action: ScalarActionSpec
    generators: list = field(default_factory=list)
    seeds: list | None = None
    parts: list = field(default_factory=list)
    map_rule: object = None
    map_target: CarrierSpec | None = None
    eta: EtaMap | None = None


def _value(d: ScalarDomain, v):
    if isinstance(v, bool):
        raise ParseError(f"boolean {v!r} is not an endpoint")
    if isinstance(v, int):
        return d.check(v % d.modulus if d.kind == "residues" else v)
    if isinstance(v, float):
        raise ParseError(f"write rational values as strings, e.g. \"3/10\", not {v!r}")
    return d.parse_value(str(v))


def parse_matrix_string(d: ScalarDomain, body: str) -> SuperIntervalMatrix:
    return parse_matrix(f"domain: {d.tag}\n" + body.replace(";", "\n"))


def _partition(tbl: dict, where: str) -> PartitionSpec:
    try:
        m, n = tbl["dims"]
    except (KeyError, ValueError, TypeError):
        raise ParseError(f"{where}: 'dims = [rows, cols]' is required") from None
    try:
        return PartitionSpec(int(m), int(n), tbl.get("row_cuts", []), tbl.get("col_cuts", []))
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from None


_TERM = re.compile(r"^(?:(?P<coef>[0-9/.]+)\s*\*\s*)?a(?P<idx>\d+)$|^(?P<const>[0-9/.]+)$")


def _compile_rule(src: CarrierSpec, dst_part: PartitionSpec, rule):
    d = src.domain
    size = src.partition.rows * src.partition.cols
    compiled = []
    if len(rule) != dst_part.rows or any(len(r) != dst_part.cols for r in rule):
        raise ParseError("map rule dimensions do not match the target dims")
    for row in rule:
        crow = []
        for expr in row:
            terms = []
            for term in str(expr).replace(" ", "").split("+"):
                m = _TERM.match(term)
                if not m:
                    raise ParseError(f"cannot read map term {term!r}")
                if m.group("const") is not None:
                    terms.append((d.parse_value(m.group("const")), None))
                else:
                    k = int(m.group("idx"))
                    if not 1 <= k <= size:
                        raise ParseError(f"map term {term!r} refers to a missing source position")
                    coef = d.parse_value(m.group("coef")) if m.group("coef") else d.one
                    terms.append((coef, k - 1))
            crow.append(terms)
        compiled.append(crow)

    def apply(v: SuperIntervalMatrix) -> SuperIntervalMatrix:
        flat = v.flat()
        grid = []
        for crow in compiled:
            out = []
            for terms in crow:
                acc = d.zero
                for coef, k in terms:
                    acc = d.add(acc, coef if k is None else d.mul(coef, flat[k]))
                out.append(acc)
            grid.append(tuple(out))
        return SuperIntervalMatrix(d, dst_part, tuple(grid))

    return apply


def load_carrier(text: str) -> CarrierFile:
    try:
        tbl = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ParseError(f"carrier file is not valid TOML: {exc}") from None
    if "domain" not in tbl:
        raise ParseError("carrier file needs a 'domain' entry")
    try:
        d = parse_domain(str(tbl["domain"]))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    p = _partition(tbl, "carrier")
    pool = tbl.get("pool")
    if pool is not None:
        pool = tuple(_value(d, v) for v in pool)
    pattern = tbl.get("pattern")
    carrier = CarrierSpec(d, p, tbl.get("op", "add"), pool, pattern)

    act = tbl.get("action", {})
    scal = act.get("scalars")
    if scal is not None:
        scal = tuple(_value(d, v) for v in scal)
    action = ScalarActionSpec(act.get("kind", "type-I"), scal, d)

    def mats(key, src=tbl):
        return [parse_matrix_string(d, s) for s in src.get(key, [])]

    cf = CarrierFile(carrier, action, mats("generators"))
    if "seeds" in tbl:
        cf.seeds = mats("seeds")
    cf.parts = [mats("generators", part) for part in tbl.get("parts", [])]
    if "map" in tbl:
        mt = tbl["map"]
        dst_part = _partition(mt, "map")
        cf.map_target = CarrierSpec(d, dst_part, mt.get("op", carrier.op))
        if "rule" not in mt:
            raise ParseError("map needs a 'rule' grid")
        cf.map_rule = _compile_rule(carrier, dst_part, mt["rule"])
    if "eta" in tbl:
        et = tbl["eta"]
        kw = {k: Fraction(str(et[k])) for k in ("eta_zero", "integer_value", "fraction_value") if k in et}
        cf.eta = EtaMap(et.get("rule", "reciprocal"), **kw)
    return cf


def read_carrier(path) -> CarrierFile:
    with open(path, encoding="utf-8") as fh:
        return load_carrier(fh.read())
