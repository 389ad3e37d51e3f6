"""Cut sets that turn an m x n grid into a super matrix.

A cut index ``k`` in ``row_cuts`` draws a horizontal line between grid rows
``k-1`` and ``k`` (0-based), so cuts live in ``1..m-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable


@dataclass(frozen=True)
class PartitionSpec:
    rows: int
    cols: int
    row_cuts: tuple = ()
    col_cuts: tuple = ()

    def __post_init__(self):
        if not (isinstance(self.rows, int) and isinstance(self.cols, int)):
            raise ValueError("dimensions must be integers")
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"dimensions must be positive, got {self.rows}x{self.cols}")
        object.__setattr__(self, "row_cuts", _normalise(self.row_cuts, self.rows, "row"))
        object.__setattr__(self, "col_cuts", _normalise(self.col_cuts, self.cols, "column"))

    @property
    def dims(self) -> tuple:
        return (self.rows, self.cols)

    @property
    def trivial(self) -> bool:
        return not self.row_cuts and not self.col_cuts

    @property
    def row_bounds(self) -> tuple:
        return (0,) + self.row_cuts + (self.rows,)

    @property
    def col_bounds(self) -> tuple:
        return (0,) + self.col_cuts + (self.cols,)

    @property
    def block_shape(self) -> tuple:
        return (len(self.row_cuts) + 1, len(self.col_cuts) + 1)

    def __str__(self):
        return f"{self.rows}x{self.cols} rows{set(self.row_cuts) or '{}'} cols{set(self.col_cuts) or '{}'}"


def _normalise(cuts: Iterable[int], size: int, what: str) -> tuple:
    out = tuple(sorted(set(int(c) for c in cuts)))
    for c in out:
        if not 0 < c < size:
            raise ValueError(f"{what} cut {c} lies outside 1..{size - 1}")
    return out


@dataclass(frozen=True)
class BlockIndex:
    block_row: int
    block_col: int
    row_range: range
    col_range: range

    @property
    def shape(self) -> tuple:
        return (len(self.row_range), len(self.col_range))


def blocks(p: PartitionSpec) -> list:
    rb, cb = p.row_bounds, p.col_bounds
    out = []
    for i in range(len(rb) - 1):
        for j in range(len(cb) - 1):
            out.append(BlockIndex(i, j, range(rb[i], rb[i + 1]), range(cb[j], cb[j + 1])))
    return out


def transpose_partition(p: PartitionSpec) -> PartitionSpec:
    return PartitionSpec(p.cols, p.rows, p.col_cuts, p.row_cuts)


def same_type(p: PartitionSpec, q: PartitionSpec) -> bool:
    return p == q


def _cut_subsets(size: int):
    # binary counter over the candidate cuts 1..size-1; bit i <-> cut i+1
    candidates = range(1, size)
    for mask in range(2 ** (size - 1)):
        yield tuple(c for i, c in enumerate(candidates) if mask >> i & 1)


def enumerate_partitions(m: int, n: int, include_trivial: bool = False) -> list:
    if m < 1 or n < 1:
        raise ValueError("dimensions must be positive")
    out = []
    for rc, cc in product(_cut_subsets(m), _cut_subsets(n)):
        if not rc and not cc and not include_trivial:
            continue
        out.append(PartitionSpec(m, n, rc, cc))
    return out


def count_proper_partitions(m: int, n: int) -> int:
    if m < 1 or n < 1:
        raise ValueError("dimensions must be positive")
    return 2 ** (m - 1) * 2 ** (n - 1) - 1
