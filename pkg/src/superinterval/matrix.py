"""Super interval matrices: an endpoint grid, a partition and a domain tag."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .domains import RESIDUES, UNIT, Scalar, ScalarDomain, Value, parse_domain
from .errors import DomainMismatch, InvalidEndpoint, ShapeMismatch, TypeMismatch
from .interval import Interval
from .partition import PartitionSpec, blocks, transpose_partition

ROW_MATRIX = "row-matrix"
COLUMN_MATRIX = "column-matrix"
ROW_VECTOR = "row-vector"
COLUMN_VECTOR = "column-vector"
GENERAL = "general"

TYPE_I = "type-I"
TYPE_II = "type-II"


@dataclass(frozen=True)
class SuperIntervalMatrix:
    """Immutable value; ``endpoints`` is a tuple of row tuples.

    Use :func:`build` (or :func:`from_rows`) rather than the constructor
    when the grid still needs validating.
    """

    domain: ScalarDomain
    partition: PartitionSpec
    endpoints: tuple

    @property
    def dims(self) -> tuple:
        return self.partition.dims

    @property
    def rows(self) -> int:
        return self.partition.rows

    @property
    def cols(self) -> int:
        return self.partition.cols

    @property
    def row_cuts(self) -> tuple:
        return self.partition.row_cuts

    @property
    def col_cuts(self) -> tuple:
        return self.partition.col_cuts

    @property
    def entries(self) -> tuple:
        """The grid as Interval objects; ``endpoints`` holds the bare values."""
        return tuple(tuple(Interval(v, self.domain) for v in row) for row in self.endpoints)

    def entry(self, i: int, j: int) -> Interval:
        return Interval(self.endpoints[i][j], self.domain)

    def flat(self) -> tuple:
        return tuple(v for row in self.endpoints for v in row)

    def block(self, bi: int, bj: int) -> "SuperIntervalMatrix":
        p = self.partition
        rb, cb = p.row_bounds, p.col_bounds
        grid = tuple(tuple(row[cb[bj]:cb[bj + 1]]) for row in self.endpoints[rb[bi]:rb[bi + 1]])
        return SuperIntervalMatrix(self.domain, PartitionSpec(len(grid), len(grid[0])), grid)

    @property
    def shape_kind(self) -> str:
        return shape_kind(self.partition)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.flat())

    def with_partition(self, p: PartitionSpec) -> "SuperIntervalMatrix":
        if p.dims != self.dims:
            raise ShapeMismatch(f"partition {p.dims} does not fit a {self.rows}x{self.cols} grid")
        return SuperIntervalMatrix(self.domain, p, self.endpoints)

    def map(self, f: Callable[[Value], Value]) -> "SuperIntervalMatrix":
        return SuperIntervalMatrix(
            self.domain, self.partition, tuple(tuple(f(v) for v in row) for row in self.endpoints)
        )

    def __str__(self):
        from .textio import render_matrix

        return render_matrix(self)


def shape_kind(p: PartitionSpec) -> str:
    if p.row_cuts and p.col_cuts:
        return GENERAL
    if p.rows == 1 and not p.row_cuts:
        return ROW_MATRIX
    if p.cols == 1 and not p.col_cuts:
        return COLUMN_MATRIX
    if p.row_cuts:
        return COLUMN_VECTOR
    if p.col_cuts:
        return ROW_VECTOR
    return GENERAL


def build(domain: ScalarDomain | str, partition: PartitionSpec, grid: Sequence[Sequence]) -> SuperIntervalMatrix:
    if isinstance(domain, str):
        domain = parse_domain(domain)
    rows = [list(r) for r in grid]
    if len(rows) != partition.rows or any(len(r) != partition.cols for r in rows):
        got = f"{len(rows)}x{len(rows[0]) if rows else 0}"
        raise ShapeMismatch(f"grid is {got} but partition expects {partition.rows}x{partition.cols}")
    out = []
    for i, row in enumerate(rows):
        vals = []
        for j, v in enumerate(row):
            if isinstance(v, str):
                v = domain.parse_value(v)
            if not domain.is_valid(v):
                raise InvalidEndpoint(f"entry ({i},{j}) = {v!r} is not a valid endpoint in {domain.tag}")
            vals.append(domain.check(v))
        out.append(tuple(vals))
    return SuperIntervalMatrix(domain, partition, tuple(out))


def from_rows(domain, grid, row_cuts=(), col_cuts=()) -> SuperIntervalMatrix:
    """Build from a list of rows, taking the dimensions from the grid itself."""
    grid = [list(r) for r in grid]
    if not grid or not grid[0]:
        raise ShapeMismatch("empty grid")
    return build(domain, PartitionSpec(len(grid), len(grid[0]), row_cuts, col_cuts), grid)


def row(domain, values, cuts=()) -> SuperIntervalMatrix:
    return from_rows(domain, [values], (), cuts)


def column(domain, values, cuts=()) -> SuperIntervalMatrix:
    return from_rows(domain, [[v] for v in values], cuts, ())


def constant(domain: ScalarDomain, partition: PartitionSpec, value) -> SuperIntervalMatrix:
    return build(domain, partition, [[value] * partition.cols for _ in range(partition.rows)])


def zero(domain: ScalarDomain, partition: PartitionSpec) -> SuperIntervalMatrix:
    return constant(domain, partition, domain.zero)


def ones(domain: ScalarDomain, partition: PartitionSpec) -> SuperIntervalMatrix:
    return constant(domain, partition, domain.one)


def identity(domain: ScalarDomain, partition: PartitionSpec) -> SuperIntervalMatrix:
    if partition.rows != partition.cols:
        raise ShapeMismatch("identity needs a square grid")
    n = partition.rows
    return build(domain, partition, [[domain.one if i == j else domain.zero for j in range(n)] for i in range(n)])


def require_same_domain(a: SuperIntervalMatrix, b: SuperIntervalMatrix) -> ScalarDomain:
    if a.domain != b.domain:
        raise DomainMismatch(f"matrices live in {a.domain.tag} and {b.domain.tag}")
    return a.domain


def require_same_type(a: SuperIntervalMatrix, b: SuperIntervalMatrix):
    pa, pb = a.partition, b.partition
    if pa.dims != pb.dims:
        raise TypeMismatch(f"dimensions differ: {pa.rows}x{pa.cols} vs {pb.rows}x{pb.cols}")
    if pa.row_cuts != pb.row_cuts:
        raise TypeMismatch(f"row cuts differ: {list(pa.row_cuts)} vs {list(pb.row_cuts)}")
    if pa.col_cuts != pb.col_cuts:
        raise TypeMismatch(f"column cuts differ: {list(pa.col_cuts)} vs {list(pb.col_cuts)}")


def zip_with(a: SuperIntervalMatrix, b: SuperIntervalMatrix, f) -> SuperIntervalMatrix:
    require_same_domain(a, b)
    require_same_type(a, b)
    grid = tuple(tuple(f(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a.endpoints, b.endpoints))
    return SuperIntervalMatrix(a.domain, a.partition, grid)


def _reject_unit(d: ScalarDomain, what: str):
    if d.kind == UNIT:
        raise DomainMismatch(f"{what} is not defined on fuzzy (unit) matrices; use min, max or a scalar product")


def add(a: SuperIntervalMatrix, b: SuperIntervalMatrix) -> SuperIntervalMatrix:
    d = require_same_domain(a, b)
    _reject_unit(d, "addition")
    return zip_with(a, b, d.add)


def hadamard(a: SuperIntervalMatrix, b: SuperIntervalMatrix) -> SuperIntervalMatrix:
    d = require_same_domain(a, b)
    _reject_unit(d, "the componentwise product")
    return zip_with(a, b, d.mul)


def negate(a: SuperIntervalMatrix) -> SuperIntervalMatrix:
    return a.map(a.domain.neg)


def coerce_scalar(s, domain: ScalarDomain) -> Value:
    """Accept a Scalar, an Interval [0,s] or a bare number acting on ``domain``."""
    if isinstance(s, (Scalar, Interval)):
        if s.domain != domain:
            raise DomainMismatch(f"scalar from {s.domain.tag} cannot act on a {domain.tag} matrix")
        return s.value if isinstance(s, Scalar) else s.upper
    if isinstance(s, str):
        return domain.parse_value(s)
    if domain.kind == RESIDUES and isinstance(s, int) and not isinstance(s, bool):
        return s % domain.modulus
    return domain.check(s)


def scalar_mul(s, a: SuperIntervalMatrix, kind: str = TYPE_I) -> SuperIntervalMatrix:
    """Scale every endpoint by ``s``.

    ``kind`` records whether the scalar arrived as a base scalar (type I) or
    as an interval [0,s] (type II); both scale endpoints identically.
    """
    if kind not in (TYPE_I, TYPE_II):
        raise ValueError(f"unknown scalar action kind {kind!r}")
    v = coerce_scalar(s, a.domain)
    return a.map(lambda x: a.domain.mul(v, x))


def transpose(a: SuperIntervalMatrix) -> SuperIntervalMatrix:
    grid = tuple(zip(*a.endpoints))
    return SuperIntervalMatrix(a.domain, transpose_partition(a.partition), grid)


def iter_blocks(a: SuperIntervalMatrix):
    for b in blocks(a.partition):
        yield b, a.block(b.block_row, b.block_col)
