"""Axiom checking and witness search on carriers.

Search strategy for an equational law of arity k on a finite carrier C
whose size fits the budget:

* if |C|^k fits as well, every k-tuple of matrices is evaluated;
* otherwise the check runs over k-tuples of *pool values*.  Carrier
  operations act position by position, so C is a direct power of the pool
  algebra and an equational law holds on C exactly when it holds on the
  pool.  A failing pool tuple is lifted to constant matrices and the
  failure is re-checked at matrix level before it is reported.

Carriers larger than the budget, and infinite ones, are sampled with a
seeded generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice, product
from types import SimpleNamespace

from ..domains import NAT, QPLUS, RESIDUES, UNIT
from ..errors import CarrierEmpty, NoneFound, UnorderedDomain
from ..matrix import SuperIntervalMatrix, add, hadamard
from .carrier import (
    FAILS,
    HOLDS_EXHAUSTIVE,
    HOLDS_SAMPLED,
    HOLDS_STRUCTURAL,
    INAPPLICABLE,
    UNKNOWN,
    Budget,
    CarrierSpec,
    matrix_op,
)
from .report import StructureReport, Verdict


def _coord_ops(c: CarrierSpec) -> SimpleNamespace:
    d = c.domain
    return SimpleNamespace(add=d.add, mul=d.mul, min=d.min, max=d.max)


def _matrix_ops() -> SimpleNamespace:
    return SimpleNamespace(add=add, mul=hadamard, min=matrix_op("min"), max=matrix_op("max"))


def _opname(op: str) -> str:
    return {"add": "add", "hadamard": "mul", "min": "min", "max": "max"}[op]


def _exhaustive(c: CarrierSpec, b: Budget) -> bool:
    return b.strategy == "auto" and c.finite and c.size() <= b.exhaustive_limit


def _check_nonempty(c: CarrierSpec):
    if c.finite and c.size() == 0:
        raise CarrierEmpty("carrier has no elements")


def check_law(c: CarrierSpec, b: Budget, arity: int, law, note: str = "") -> Verdict:
    """Evaluate ``law(ops, *xs) -> bool`` over the carrier.

    ``ops`` exposes add/mul/min/max at whichever level (pool values or
    matrices) the search runs.
    """
    mops = _matrix_ops()
    if _exhaustive(c, b):
        size = c.size()
        if size ** arity <= b.exhaustive_limit or not c.labels:
            elems = list(c.elements())
            for xs in product(elems, repeat=arity):
                if not law(mops, *xs):
                    return Verdict(FAILS, tuple(xs), note)
            return Verdict(HOLDS_EXHAUSTIVE, note=note or f"all {size ** arity} tuples")
        cops = _coord_ops(c)
        for vs in product(c.values, repeat=arity):
            if not law(cops, *vs):
                xs = tuple(c.fill(v) for v in vs)
                if law(mops, *xs):
                    raise AssertionError("pool counterexample did not lift to matrices")
                return Verdict(FAILS, xs, note)
        return Verdict(HOLDS_EXHAUSTIVE, note=note or f"positionwise over {len(c.values) ** arity} pool tuples")
    rng = b.rng()
    for _ in range(b.sample_count):
        xs = tuple(c.sample(rng) for _ in range(arity))
        if not law(mops, *xs):
            return Verdict(FAILS, xs, note)
    return Verdict(HOLDS_SAMPLED, note=note or f"seed {b.seed}, {b.sample_count} samples")


def _closure(c: CarrierSpec, op: str, b: Budget) -> Verdict:
    if not c.finite:
        return Verdict(HOLDS_STRUCTURAL, note=f"{c.domain.tag} is closed under {op}")
    f = getattr(_coord_ops(c), _opname(op))
    vals = set(c.values)
    for x, y in product(c.values, repeat=2):
        if f(x, y) not in vals:
            return Verdict(FAILS, (c.fill(x), c.fill(y)), f"{op} leaves the pool")
    status = HOLDS_EXHAUSTIVE if c.size() <= b.exhaustive_limit else HOLDS_STRUCTURAL
    return Verdict(status, note="pool closed under " + op)


def _neutral(c: CarrierSpec, op: str):
    """Neutral pool value for ``op``, or None."""
    d = c.domain
    if c.finite:
        f = getattr(_coord_ops(c), _opname(op))
        for e in c.values:
            if all(f(e, a) == a and f(a, e) == a for a in c.values):
                return e
        return None
    if op == "add":
        return d.zero
    if op == "hadamard":
        return d.one
    if op == "max":
        return d.zero
    if op == "min" and d.kind == UNIT:
        return d.one
    return None


def _identity(c: CarrierSpec, op: str, b: Budget) -> tuple:
    e = _neutral(c, op)
    if not c.labels:
        return Verdict(HOLDS_EXHAUSTIVE, note="single-element carrier"), c.fill(0)
    if e is None:
        if c.finite:
            return Verdict(FAILS, (c.fill(c.values[0]),), f"no pool value is neutral for {op}"), None
        return Verdict(UNKNOWN, note=f"{c.domain.tag} has no neutral element for {op} without an upper bound"), None
    ident = c.fill(e)
    if c.finite:
        status = HOLDS_EXHAUSTIVE if c.size() <= b.exhaustive_limit else HOLDS_STRUCTURAL
        return Verdict(status, note=f"neutral endpoint {c.domain.format_value(e)}"), ident
    return Verdict(HOLDS_STRUCTURAL, note=f"neutral endpoint {c.domain.format_value(e)}"), ident


def _inverse(c: CarrierSpec, op: str, b: Budget) -> Verdict:
    e = _neutral(c, op)
    if not c.labels:
        return Verdict(HOLDS_EXHAUSTIVE, note="single-element carrier")
    if e is None:
        return Verdict(INAPPLICABLE, note="no identity, so inverses are undefined")
    d = c.domain
    f = getattr(_coord_ops(c), _opname(op))
    if c.finite:
        for a in c.values:
            if not any(f(a, x) == e for x in c.values):
                return Verdict(FAILS, (c.fill(a),), f"endpoint {d.format_value(a)} has no inverse")
        status = HOLDS_EXHAUSTIVE if c.size() <= b.exhaustive_limit else HOLDS_STRUCTURAL
        note = "inverse of a is n-a" if op == "add" and d.kind == RESIDUES else "every pool value invertible"
        return Verdict(status, note=note)
    # infinite ordered domains: pick an endpoint with provably no partner
    bad = {"add": 1, "hadamard": 0, "min": 0, "max": 1}[op]
    w = c.fill(d.check(bad))
    return Verdict(FAILS, (w,), f"no nonnegative endpoint b satisfies {op}({bad}, b) = {d.format_value(e)}")


def _assoc(op):
    return lambda o, x, y, z: getattr(o, op)(getattr(o, op)(x, y), z) == getattr(o, op)(x, getattr(o, op)(y, z))


def _comm(op):
    return lambda o, x, y: getattr(o, op)(x, y) == getattr(o, op)(y, x)


def _report(subject: str, c: CarrierSpec, b: Budget) -> StructureReport:
    sampled = not _exhaustive(c, b)
    return StructureReport(
        subject=subject,
        carrier_size=c.size(),
        seed=b.seed if sampled else None,
        sample_count=b.sample_count if sampled else None,
    )


def check_semigroup(c: CarrierSpec, b: Budget = Budget()) -> StructureReport:
    _check_nonempty(c)
    r = _report(f"semigroup under {c.op}", c, b)
    name = _opname(c.op)
    r.add("closure", _closure(c, c.op, b))
    r.add("associativity", check_law(c, b, 3, _assoc(name)))
    r.add("commutativity", check_law(c, b, 2, _comm(name)))
    v, ident = _identity(c, c.op, b)
    r.add("identity", v)
    if ident is not None:
        r.details["identity element"] = [ident]
    return r


def check_group(c: CarrierSpec, b: Budget = Budget()) -> StructureReport:
    r = check_semigroup(c, b)
    r.subject = f"group under {c.op}"
    r.add("inverses", _inverse(c, c.op, b))
    return r


def check_semiring(c: CarrierSpec, b: Budget = Budget()) -> StructureReport:
    """Additive monoid, multiplicative semigroup and both distributive laws."""
    _check_nonempty(c)
    r = _report("semiring under add and hadamard", c, b)
    r.add("add-closure", _closure(c, "add", b))
    r.add("add-associativity", check_law(c, b, 3, _assoc("add")))
    r.add("add-commutativity", check_law(c, b, 2, _comm("add")))
    v, ident = _identity(c, "add", b)
    r.add("add-identity", v)
    r.add("mul-closure", _closure(c, "hadamard", b))
    r.add("mul-associativity", check_law(c, b, 3, _assoc("mul")))
    r.add("mul-commutativity", check_law(c, b, 2, _comm("mul")))
    r.add("left-distributivity", check_law(c, b, 3, lambda o, x, y, z: o.mul(x, o.add(y, z)) == o.add(o.mul(x, y), o.mul(x, z))))
    r.add("right-distributivity", check_law(c, b, 3, lambda o, x, y, z: o.mul(o.add(x, y), z) == o.add(o.mul(x, z), o.mul(y, z))))
    if ident is not None:
        r.details["additive identity"] = [ident]
    return r


def check_lattice(c: CarrierSpec, b: Budget = Budget()) -> StructureReport:
    """Meet/join laws for entrywise min and max on an ordered domain."""
    _check_nonempty(c)
    d = c.domain
    if not d.ordered:
        raise UnorderedDomain(f"{d.tag} has no order, so min/max are undefined")
    r = _report("lattice under min and max", c, b)
    for op in ("min", "max"):
        r.add(f"{op}-associativity", check_law(c, b, 3, _assoc(op)))
        r.add(f"{op}-commutativity", check_law(c, b, 2, _comm(op)))
        r.add(f"{op}-idempotence", check_law(c, b, 1, lambda o, x, op=op: getattr(o, op)(x, x) == x))
    r.add("absorption", check_law(c, b, 2, lambda o, x, y: o.min(x, o.max(x, y)) == x and o.max(x, o.min(x, y)) == x))
    r.add("distributivity", check_law(c, b, 3, lambda o, x, y, z: o.min(x, o.max(y, z)) == o.max(o.min(x, y), o.min(x, z))))
    bottom = c.contains(c.fill(d.zero)) if c.labels else True
    if bottom:
        r.add("bottom", check_law(c, b, 1, lambda o, x: o.max(x, _fill_like(o, x, d.zero)) == x))
    else:
        r.add("bottom", Verdict(INAPPLICABLE, note="zero is not in the carrier"))
    if d.kind == UNIT and c.contains(c.fill(d.one)):
        r.add("top", check_law(c, b, 1, lambda o, x: o.min(x, _fill_like(o, x, d.one)) == x))
    else:
        r.add("top", Verdict(INAPPLICABLE, note="no top element in the carrier"))
    return r


def _fill_like(o, x, v):
    if isinstance(x, SuperIntervalMatrix):
        return x.map(lambda _: v)
    return v


def distributivity_sides(x, y, z) -> tuple:
    """Both sides of (x+y)z = xz + yz for a concrete triple."""
    return hadamard(add(x, y), z), add(hadamard(x, z), hadamard(y, z))


# -- strictness ------------------------------------------------------------


def check_strictness(c: CarrierSpec, b: Budget = Budget(), seeds=None) -> StructureReport:
    """Is a+b=0 only possible for a=b=0?

    ``seeds`` lists candidate matrices tried first as the nonzero summand;
    otherwise the lexicographically least zero-sum pair is reported.
    """
    _check_nonempty(c)
    r = StructureReport("strictness of addition", carrier_size=c.size())
    if c.op != "add":
        r.add("strict", Verdict(INAPPLICABLE, note="strictness concerns additive carriers"))
        return r
    if not c.labels:
        r.add("strict", Verdict(HOLDS_EXHAUSTIVE, note="only the zero matrix"))
        return r
    d = c.domain
    if d.kind != RESIDUES:
        r.add("strict", Verdict(HOLDS_STRUCTURAL, note="nonnegative endpoints: a+b=0 forces a=b=0"))
        return r
    vals = set(c.values)
    for s in seeds or ():
        if not c.contains(s) or s.is_zero():
            continue
        xs = c.coords(s)
        if all(d.neg(a) in vals for a in xs):
            y = c.matrix([d.neg(a) for a in xs])
            if add(s, y).is_zero():
                r.add("strict", Verdict(FAILS, (s, y), "nonzero pair summing to zero"))
                return r
    good = [a for a in c.values if d.neg(a) in vals]
    nonzero = [a for a in good if a != 0]
    if not nonzero:
        status = HOLDS_EXHAUSTIVE if c.size() <= b.exhaustive_limit else HOLDS_STRUCTURAL
        r.add("strict", Verdict(status, note="no nonzero pool value has a negative in the pool"))
        return r
    k = len(c.labels)
    if good[0] == 0:
        coords = [0] * (k - 1) + [nonzero[0]]
    else:
        coords = [good[0]] * k
    x = c.matrix(coords)
    y = c.matrix([d.neg(a) for a in coords])
    assert add(x, y).is_zero() and not x.is_zero()
    r.add("strict", Verdict(FAILS, (x, y), "nonzero pair summing to zero"))
    return r


# -- witness search ----------------------------------------------------------

ZERO_DIVISOR = "zero-divisor-pair"
IDEMPOTENT = "idempotent"
UNIT_PAIR = "unit-pair"
ADDITIVE_INVERSE = "additive-inverse-pair"
WITNESS_KINDS = (ZERO_DIVISOR, IDEMPOTENT, UNIT_PAIR, ADDITIVE_INVERSE)


@dataclass
class WitnessSearch:
    kind: str
    witnesses: list = field(default_factory=list)
    verdict: str = UNKNOWN  # "found", "none-exhaustive" or "unknown"
    scanned: int = 0

    def __contains__(self, item):
        if isinstance(item, SuperIntervalMatrix):
            item = (item,)
        return tuple(item) in [tuple(w) for w in self.witnesses]

    def __len__(self):
        return len(self.witnesses)


def _search_values(c: CarrierSpec) -> tuple:
    if c.values is not None:
        return c.values
    if c.domain.kind == NAT:
        return (0, 1, 2)
    if c.domain.kind == QPLUS:
        return (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))
    return (Fraction(0), Fraction(1, 2), Fraction(1))


def find_witnesses(
    c: CarrierSpec,
    kind: str,
    b: Budget = Budget(),
    seeds=None,
    max_witnesses: int = 10_000,
) -> WitnessSearch:
    """Enumerate witnesses of ``kind`` in lexicographic order.

    Position by position, the admissible partners of an endpoint form a
    fixed set, so partners of a matrix are the product of those sets.  With
    ``seeds`` only the given matrices are tried as the first component.
    An exhaustive search that finds nothing raises NoneFound carrying the
    finished search; a truncated or sampled one returns verdict "unknown".
    """
    if kind not in WITNESS_KINDS:
        raise ValueError(f"unknown witness kind {kind!r}; expected one of {WITNESS_KINDS}")
    d = c.domain
    if d.kind == UNIT:
        raise ValueError("witness search needs an additive or multiplicative carrier, not a fuzzy one")
    vals = _search_values(c)
    one = c.fill(d.one)
    out = WitnessSearch(kind)

    if kind == IDEMPOTENT:
        def ok(x):
            return not x.is_zero() and x != one and hadamard(x, x) == x

        if seeds is not None:
            cands = (s for s in seeds if c.contains(s))
        else:
            idem = [a for a in vals if d.mul(a, a) == a]
            cands = (c.matrix(t) for t in product(idem, repeat=len(c.labels)))
        exhausted = True
        for x in cands:
            out.scanned += 1
            if ok(x):
                out.witnesses.append((x,))
                if len(out.witnesses) >= max_witnesses:
                    exhausted = False
                    break
        return _finish(out, c, exhausted and seeds is None)

    rel = {
        ZERO_DIVISOR: lambda a, x: d.mul(a, x) == 0,
        UNIT_PAIR: lambda a, x: d.mul(a, x) == d.one,
        ADDITIVE_INVERSE: lambda a, x: d.add(a, x) == 0,
    }[kind]
    partners = {a: [x for x in vals if rel(a, x)] for a in vals}

    def ok(x, y):
        if kind == ZERO_DIVISOR:
            return not x.is_zero() and not y.is_zero() and hadamard(x, y).is_zero()
        if kind == UNIT_PAIR:
            return hadamard(x, y) == one and not (x == one and y == one)
        return not x.is_zero() and add(x, y).is_zero()

    if seeds is not None:
        cands = ((s, c.coords(s)) for s in seeds if c.contains(s))
    else:
        usable = [a for a in vals if partners[a]]
        cands = ((c.matrix(t), t) for t in product(usable, repeat=len(c.labels)))
    exhausted = True
    for x, xc in cands:
        out.scanned += 1
        if out.scanned > b.exhaustive_limit:
            exhausted = False
            break
        if any(a not in partners for a in xc):
            continue
        for yc in product(*(partners[a] for a in xc)):
            y = c.matrix(yc)
            if ok(x, y):
                out.witnesses.append((x, y))
                if len(out.witnesses) >= max_witnesses:
                    exhausted = False
                    break
        if not exhausted:
            break
    return _finish(out, c, exhausted and seeds is None)


def _finish(out: WitnessSearch, c: CarrierSpec, complete: bool) -> WitnessSearch:
    if out.witnesses:
        out.verdict = "found"
    elif complete and c.finite:
        out.verdict = "none-exhaustive"
        raise NoneFound(f"no {out.kind} in the carrier ({out.scanned} scanned)", out)
    else:
        out.verdict = UNKNOWN
    return out


def first_witness(c: CarrierSpec, kind: str, b: Budget = Budget()):
    """Lexicographically least witness, or None when the search was cut short."""
    res = find_witnesses(c, kind, b, max_witnesses=1)
    return next(islice(iter(res.witnesses), 0, 1), None)
