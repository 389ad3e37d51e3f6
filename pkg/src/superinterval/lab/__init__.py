"""Executable checks of algebraic claims about carriers of super interval matrices."""

from .axioms import (
    ADDITIVE_INVERSE,
    IDEMPOTENT,
    UNIT_PAIR,
    WITNESS_KINDS,
    ZERO_DIVISOR,
    WitnessSearch,
    check_group,
    check_lattice,
    check_law,
    check_semigroup,
    check_semiring,
    check_strictness,
    distributivity_sides,
    find_witnesses,
)
from .carrier import (
    FAILS,
    HOLDS_EXHAUSTIVE,
    HOLDS_SAMPLED,
    HOLDS_STRUCTURAL,
    INAPPLICABLE,
    UNKNOWN,
    Budget,
    CarrierSpec,
    ScalarActionSpec,
)
from .maps import check_linear_map
from .report import StructureReport, Verdict
from .spans import (
    BasisDemo,
    GeneratingSet,
    IndependenceResult,
    SpanResult,
    check_direct_sum,
    check_ideal,
    combine,
    find_generating_set,
    in_span,
    independent_exceeds_basis_demo,
    is_independent,
    span,
)
