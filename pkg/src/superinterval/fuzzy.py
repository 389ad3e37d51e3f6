"""Fuzzy super interval matrices: endpoints in [0,1], composed by min/max.

Also the fuzzification maps eta that turn an exact matrix into a fuzzy one,
and an audit of eta's superadditivity inequality
eta(a+b) >= min(eta(a), eta(b)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .domains import UNIT, UNIT_RATIONALS, ScalarDomain
from .errors import DomainMismatch, ImageEscape, ScalarOutOfRange
from .matrix import SuperIntervalMatrix, coerce_scalar, zip_with

FuzzySuperMatrix = SuperIntervalMatrix


def entry_min(a: SuperIntervalMatrix, b: SuperIntervalMatrix) -> SuperIntervalMatrix:
    """Entrywise min over any ordered domain."""
    return zip_with(a, b, a.domain.min)


def entry_max(a: SuperIntervalMatrix, b: SuperIntervalMatrix) -> SuperIntervalMatrix:
    return zip_with(a, b, a.domain.max)


def require_fuzzy(a: SuperIntervalMatrix):
    if a.domain.kind != UNIT:
        raise DomainMismatch(f"expected a fuzzy (unit) matrix, got domain {a.domain.tag}")


def fuzzy_min(a: SuperIntervalMatrix, b: SuperIntervalMatrix) -> SuperIntervalMatrix:
    require_fuzzy(a)
    require_fuzzy(b)
    return entry_min(a, b)


def fuzzy_max(a: SuperIntervalMatrix, b: SuperIntervalMatrix) -> SuperIntervalMatrix:
    require_fuzzy(a)
    require_fuzzy(b)
    return entry_max(a, b)


def _unit_scalar(s) -> Fraction:
    if isinstance(s, str):
        s = Fraction(s)
    elif not hasattr(s, "domain"):
        s = Fraction(s)
    if isinstance(s, Fraction) and not 0 <= s <= 1:
        raise ScalarOutOfRange(f"fuzzy scalar {s} lies outside [0,1]")
    return coerce_scalar(s, UNIT_RATIONALS)


def scalar_min(s, a: SuperIntervalMatrix) -> SuperIntervalMatrix:
    require_fuzzy(a)
    v = _unit_scalar(s)
    return a.map(lambda x: min(v, x))


def scalar_max(s, a: SuperIntervalMatrix) -> SuperIntervalMatrix:
    require_fuzzy(a)
    v = _unit_scalar(s)
    return a.map(lambda x: max(v, x))


def scalar_prod(s, a: SuperIntervalMatrix) -> SuperIntervalMatrix:
    require_fuzzy(a)
    v = _unit_scalar(s)
    return a.map(lambda x: v * x)


SCALAR_OPS = {"min": scalar_min, "max": scalar_max, "prod": scalar_prod}
COMBINE_OPS = {"min": fuzzy_min, "max": fuzzy_max}


def pairing_sides(combine: str, scalar_op: str, s, x, y) -> tuple:
    """Scale-then-combine versus combine-then-scale for one of the four pairings.

    Returns ``(combine(op(s,x), op(s,y)), op(s, combine(x,y)))``.
    """
    c, f = COMBINE_OPS[combine], SCALAR_OPS[scalar_op]
    return c(f(s, x), f(s, y)), f(s, c(x, y))


# -- fuzzification ---------------------------------------------------------

RECIPROCAL = "reciprocal"
CLASSES = "classes"


@dataclass(frozen=True)
class EtaMap:
    """Endpoint map into [0,1].

    ``reciprocal``: a -> 1/a, 0 -> eta_zero.  Endpoints strictly between 0
    and 1 have no image in [0,1] and raise ImageEscape.

    ``classes``: 0 -> eta_zero, positive integers -> ``integer_value``,
    other positive rationals -> ``fraction_value``.
    """

    rule: str = RECIPROCAL
    eta_zero: Fraction = Fraction(1)
    integer_value: Fraction = Fraction(1, 3)
    fraction_value: Fraction = Fraction(1, 4)

    def __post_init__(self):
        if self.rule not in (RECIPROCAL, CLASSES):
            raise ValueError(f"unknown eta rule {self.rule!r}")
        for name in ("eta_zero", "integer_value", "fraction_value"):
            v = Fraction(getattr(self, name))
            if not 0 <= v <= 1:
                raise ScalarOutOfRange(f"{name} = {v} lies outside [0,1]")
            object.__setattr__(self, name, v)

    def __call__(self, a) -> Fraction:
        a = Fraction(a)
        if a == 0:
            return self.eta_zero
        if self.rule == RECIPROCAL:
            if a < 1:
                raise ImageEscape(f"1/{a} lies outside [0,1]")
            return 1 / a
        return self.integer_value if a.denominator == 1 else self.fraction_value


def fuzzify(a: SuperIntervalMatrix, eta: EtaMap) -> SuperIntervalMatrix:
    if a.domain.kind == UNIT:
        raise DomainMismatch("matrix is already fuzzy")
    grid = tuple(tuple(eta(v) for v in row) for row in a.endpoints)
    return SuperIntervalMatrix(UNIT_RATIONALS, a.partition, grid)


def audit_eta(eta: EtaMap, carrier, budget=None):
    """Check eta(a+b) >= min(eta(a), eta(b)) entrywise on an additive carrier.

    Since addition and eta both act position by position, the inequality
    holds for all matrix pairs exactly when it holds for all endpoint pairs
    of the pool.  Every failing endpoint pair is listed in the details; the
    reported witness is the lexicographically least one, lifted to constant
    matrices and re-checked.
    """
    from .lab.carrier import FAILS, HOLDS_EXHAUSTIVE, HOLDS_SAMPLED, INAPPLICABLE, Budget
    from .lab.report import StructureReport, Verdict
    from .matrix import add

    budget = budget or Budget()
    d: ScalarDomain = carrier.domain
    r = StructureReport("eta superadditivity: eta(a+b) >= min(eta(a), eta(b))", carrier_size=carrier.size())
    if carrier.op != "add" or d.kind == UNIT:
        r.add("superadditivity", Verdict(INAPPLICABLE, note="needs an additive residue or nat carrier"))
        return r
    if not carrier.labels:
        r.add("superadditivity", Verdict(HOLDS_EXHAUSTIVE, note="only the zero matrix"))
        return r

    if carrier.finite:
        vals = carrier.values
        pairs = product(vals, repeat=2)
        exhaustive = True
    else:
        rng = budget.rng()
        vals = None
        pairs = [(carrier.sample_value(rng), carrier.sample_value(rng)) for _ in range(budget.sample_count)]
        exhaustive = False

    failing = []
    for x, y in pairs:
        if eta(d.add(x, y)) < min(eta(x), eta(y)):
            failing.append((x, y))
    if not exhaustive:
        failing = sorted(set(failing))
    fmt = d.format_value
    r.details["failing endpoint pairs"] = [f"({fmt(x)},{fmt(y)})" for x, y in failing]
    if not failing:
        if exhaustive:
            r.add("superadditivity", Verdict(HOLDS_EXHAUSTIVE, note=f"all {len(vals) ** 2} endpoint pairs"))
        else:
            r.seed, r.sample_count = budget.seed, budget.sample_count
            r.add("superadditivity", Verdict(HOLDS_SAMPLED, note=f"seed {budget.seed}, {budget.sample_count} samples"))
        return r
    x, y = failing[0]
    A, B = carrier.fill(x), carrier.fill(y)
    lhs = fuzzify(add(A, B), eta)
    rhs = entry_min(fuzzify(A, eta), fuzzify(B, eta))
    assert any(p < q for p, q in zip(lhs.flat(), rhs.flat()))
    note = f"eta({fmt(d.add(x, y))}) = {eta(d.add(x, y))} < min(eta({fmt(x)}), eta({fmt(y)})) = {min(eta(x), eta(y))}"
    r.add("superadditivity", Verdict(FAILS, (A, B), note))
    return r


def eta_violation(eta: EtaMap, d: ScalarDomain, a, b) -> bool:
    """True when the endpoint pair (a, b) violates the inequality."""
    return eta(d.add(a, b)) < min(eta(a), eta(b))
