"""Block-respecting and partition-agnostic matrix products."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotConformable, PartitionMismatch, ShapeMismatch
from .matrix import SuperIntervalMatrix, require_same_domain, transpose
from .partition import PartitionSpec


@dataclass(frozen=True)
class ConformabilityReport:
    flat_ok: bool
    block_ok: bool
    detail: str


def conformability(a: SuperIntervalMatrix, b: SuperIntervalMatrix) -> ConformabilityReport:
    if a.cols != b.rows:
        return ConformabilityReport(False, False, f"inner dimensions differ: {a.cols} columns vs {b.rows} rows")
    if a.col_cuts != b.row_cuts:
        return ConformabilityReport(
            True,
            False,
            f"column cuts of the left factor {list(a.col_cuts)} differ from row cuts of the right factor {list(b.row_cuts)}",
        )
    return ConformabilityReport(True, True, "conformable")


def _flat_product(d, x, y):
    # x: p x q grid, y: q x r grid, raw endpoints
    cols = list(zip(*y))
    out = []
    for row in x:
        vals = []
        for col in cols:
            acc = d.zero
            for u, v in zip(row, col):
                acc = d.add(acc, d.mul(u, v))
            vals.append(acc)
        out.append(tuple(vals))
    return out


def major_product(a: SuperIntervalMatrix, b: SuperIntervalMatrix) -> SuperIntervalMatrix:
    d = require_same_domain(a, b)
    rep = conformability(a, b)
    if not rep.flat_ok:
        raise NotConformable(rep.detail)
    if not rep.block_ok:
        raise PartitionMismatch(rep.detail)
    ra, shared, cb = a.partition.row_bounds, a.partition.col_bounds, b.partition.col_bounds
    grid = [[d.zero] * b.cols for _ in range(a.rows)]
    for i in range(len(ra) - 1):
        for k in range(len(cb) - 1):
            # block (i,k) = sum over j of A(i,j) B(j,k), left to right in j
            acc = None
            for j in range(len(shared) - 1):
                xa = [r[shared[j]:shared[j + 1]] for r in a.endpoints[ra[i]:ra[i + 1]]]
                yb = [r[cb[k]:cb[k + 1]] for r in b.endpoints[shared[j]:shared[j + 1]]]
                part = _flat_product(d, xa, yb)
                if acc is None:
                    acc = part
                else:
                    acc = [tuple(d.add(u, v) for u, v in zip(r1, r2)) for r1, r2 in zip(acc, part)]
            for di, r in enumerate(acc):
                for dk, v in enumerate(r):
                    grid[ra[i] + di][cb[k] + dk] = v
    p = PartitionSpec(a.rows, b.cols, a.row_cuts, b.col_cuts)
    return SuperIntervalMatrix(d, p, tuple(tuple(r) for r in grid))


def extended_product(a: SuperIntervalMatrix, b: SuperIntervalMatrix) -> SuperIntervalMatrix:
    d = require_same_domain(a, b)
    if a.cols != b.rows:
        raise NotConformable(conformability(a, b).detail)
    grid = _flat_product(d, a.endpoints, b.endpoints)
    p = PartitionSpec(a.rows, b.cols, a.row_cuts, b.col_cuts)
    return SuperIntervalMatrix(d, p, tuple(grid))


def outer_product(col: SuperIntervalMatrix, row: SuperIntervalMatrix) -> SuperIntervalMatrix:
    d = require_same_domain(col, row)
    if col.cols != 1:
        raise ShapeMismatch(f"left factor must be a single column, got {col.rows}x{col.cols}")
    if row.rows != 1:
        raise ShapeMismatch(f"right factor must be a single row, got {row.rows}x{row.cols}")
    grid = tuple(tuple(d.mul(c[0], v) for v in row.endpoints[0]) for c in col.endpoints)
    p = PartitionSpec(col.rows, row.cols, col.row_cuts, row.col_cuts)
    return SuperIntervalMatrix(d, p, grid)


def gram(a: SuperIntervalMatrix) -> SuperIntervalMatrix:
    """A-transpose times A; always block-conformable."""
    return major_product(transpose(a), a)
