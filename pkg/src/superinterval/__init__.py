"""Exact arithmetic on super interval matrices.

A super interval matrix is a grid of intervals [0, a] split into blocks by
row and column cuts.  Endpoints live in one of four exact domains: residues
mod n, nonnegative integers, nonnegative rationals, or the rational unit
interval used for fuzzy matrices.
"""

from .block import (
    ConformabilityReport,
    conformability,
    extended_product,
    gram,
    major_product,
    outer_product,
)
from .domains import (
    NATURALS,
    NONNEG_RATIONALS,
    UNIT_RATIONALS,
    Scalar,
    ScalarDomain,
    parse_domain,
    residues,
    scalar,
    scalar_add,
    scalar_max,
    scalar_min,
    scalar_mul,
)
from .errors import *  # noqa: F401,F403
from .fuzzy import EtaMap, audit_eta, fuzzify, fuzzy_max, fuzzy_min, pairing_sides, scalar_prod
from .interval import Interval, ivl_add, ivl_max, ivl_min, ivl_mul
from .matrix import (
    SuperIntervalMatrix,
    add,
    build,
    column,
    constant,
    from_rows,
    hadamard,
    identity,
    ones,
    row,
    transpose,
    zero,
)
from .matrix import scalar_mul as matrix_scalar_mul
from .partition import (
    BlockIndex,
    PartitionSpec,
    blocks,
    count_proper_partitions,
    enumerate_partitions,
    same_type,
    transpose_partition,
)
from .textio import parse_matrix, read_matrix, render_matrix

__version__ = "0.1.0"
