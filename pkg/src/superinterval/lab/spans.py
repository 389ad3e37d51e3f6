"""Spans, independence, generating sets, ideals and direct sums.

Residue carriers are finite modules and are handled exactly through
:class:`ResidueModule`.  Over nat the additive closure of a set is the cone
of nonnegative integer combinations, whose membership is decided exactly by
bounded search; over qplus the cone of nonnegative rational combinations is
decided exactly by linear programming.  Only materialising an infinite span
needs a coefficient bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from ..domains import NAT, QPLUS, RESIDUES, ScalarDomain
from ..errors import BudgetExceeded, DomainMismatch, GeneratorOutsideCarrier, TypeMismatch
from ..matrix import SuperIntervalMatrix, add, hadamard, scalar_mul
from ..partition import PartitionSpec
from .carrier import (
    FAILS,
    HOLDS_EXHAUSTIVE,
    HOLDS_SAMPLED,
    HOLDS_STRUCTURAL,
    INAPPLICABLE,
    Budget,
    CarrierSpec,
    ScalarActionSpec,
)
from .lattice import ResidueModule, cone_coefficients, nonneg_solution
from .report import StructureReport, Verdict

DEFAULT_ACTION = ScalarActionSpec()


def _frame(vectors) -> tuple:
    vs = list(vectors)
    if not vs:
        raise ValueError("need at least one matrix")
    d, p = vs[0].domain, vs[0].partition
    for v in vs[1:]:
        if v.domain != d:
            raise DomainMismatch(f"mixed domains {d.tag} and {v.domain.tag}")
        if v.partition != p:
            raise TypeMismatch(f"mixed partitions {p} and {v.partition}")
    return d, p


def _unflat(d: ScalarDomain, p: PartitionSpec, flat) -> SuperIntervalMatrix:
    grid = tuple(tuple(flat[i * p.cols:(i + 1) * p.cols]) for i in range(p.rows))
    return SuperIntervalMatrix(d, p, grid)


def _sort_key(m: SuperIntervalMatrix):
    return m.flat()


@dataclass(frozen=True)
class SpanResult:
    elements: tuple
    complete: bool
    note: str = ""

    def __contains__(self, m):
        return m in set(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def span(generators, action: ScalarActionSpec = DEFAULT_ACTION, b: Budget = Budget()) -> SpanResult:
    """Materialise the least set containing ``generators`` closed under
    addition and the scalar action.

    Over nat and qplus the result is the slice with coefficients drawn from
    the action's bounded scalar list and is flagged incomplete.
    """
    d, p = _frame(generators)
    gens = [g.flat() for g in generators]
    if d.kind == RESIDUES:
        mod = ResidueModule(d.modulus, p.rows * p.cols, gens)
        if mod.size() > b.exhaustive_limit:
            raise BudgetExceeded(f"span has {mod.size()} elements, above the limit {b.exhaustive_limit}")
        els = sorted((_unflat(d, p, v) for v in mod.elements()), key=_sort_key)
        return SpanResult(tuple(els), True, f"{len(els)} elements")
    if d.kind not in (NAT, QPLUS):
        raise DomainMismatch(f"spans are not defined over {d.tag}")
    scalars = action.scalar_values(d, b)
    nonzero = [g for g in gens if any(g)]
    if not nonzero:
        return SpanResult((_unflat(d, p, gens[0]),), True, "only the zero matrix")
    total = len(scalars) ** len(nonzero)
    if total > b.exhaustive_limit:
        raise BudgetExceeded(f"{total} coefficient tuples exceed the limit {b.exhaustive_limit}")
    seen = set()
    for cs in product(scalars, repeat=len(nonzero)):
        v = [d.zero] * len(gens[0])
        for c, g in zip(cs, nonzero):
            v = [x + c * y for x, y in zip(v, g)]
        seen.add(tuple(v))
    els = sorted((_unflat(d, p, v) for v in seen), key=_sort_key)
    return SpanResult(tuple(els), False, f"coefficients bounded by {max(scalars)}")


def in_span(v: SuperIntervalMatrix, generators, action: ScalarActionSpec = DEFAULT_ACTION, b: Budget = Budget()):
    """Return coefficients expressing ``v`` through ``generators``, or None.

    Exact in every supported domain.
    """
    d, p = _frame([v] + list(generators))
    target = v.flat()
    gens = [g.flat() for g in generators]
    if d.kind == RESIDUES:
        if not gens:
            return [] if not any(target) else None
        return ResidueModule(d.modulus, len(target), gens).coefficients(target)
    if d.kind == NAT:
        return cone_coefficients(target, gens)
    if d.kind == QPLUS:
        return nonneg_solution(target, gens)
    raise DomainMismatch(f"spans are not defined over {d.tag}")


def combine(coeffs, generators) -> SuperIntervalMatrix:
    d, p = _frame(generators)
    acc = SuperIntervalMatrix(d, p, tuple(tuple(d.zero for _ in range(p.cols)) for _ in range(p.rows)))
    for c, g in zip(coeffs, generators):
        acc = add(acc, scalar_mul(c, g))
    return acc


# -- independence --------------------------------------------------------------


@dataclass(frozen=True)
class IndependenceResult:
    independent: bool
    mode: str
    certificate: dict | None = None

    def __bool__(self):
        return self.independent


def _multiple_of(d: ScalarDomain, vi, vj, scalars):
    """A scalar s with vi == s * vj, or None."""
    if d.kind == RESIDUES:
        for s in scalars:
            if all(d.mul(s, y) == x for x, y in zip(vi, vj)):
                return s
        return None
    piv = next((k for k, y in enumerate(vj) if y != 0), None)
    if piv is None:
        return d.zero if not any(vi) else None
    s = Fraction(vi[piv]) / Fraction(vj[piv])
    if d.kind == NAT:
        if s.denominator != 1:
            return None
        s = s.numerator
    if scalars is not None and s not in scalars:
        return None
    return s if all(s * y == x for x, y in zip(vi, vj)) else None


def is_independent(vectors, action: ScalarActionSpec = DEFAULT_ACTION, mode: str = "combination", b: Budget = Budget()):
    """Pairwise mode: no element is a scalar multiple of another.
    Combination mode: no element lies in the span of the others.
    """
    vs = list(vectors)
    d, _ = _frame(vs)
    flats = [v.flat() for v in vs]
    if mode == "pairwise":
        scalars = action.scalars if action.scalars is not None else (
            tuple(d.elements()) if d.kind == RESIDUES else None
        )
        for i, j in product(range(len(vs)), repeat=2):
            if i == j:
                continue
            s = _multiple_of(d, flats[i], flats[j], scalars)
            if s is not None:
                return IndependenceResult(False, mode, {"index": i, "multiple_of": j, "scalar": s})
        return IndependenceResult(True, mode)
    if mode != "combination":
        raise ValueError(f"unknown independence mode {mode!r}")
    for i, v in enumerate(vs):
        others = vs[:i] + vs[i + 1:]
        if not any(v.flat()):
            return IndependenceResult(False, mode, {"index": i, "coefficients": {}})
        if not others:
            continue
        cs = in_span(v, others, action, b)
        if cs is not None:
            idx = [j for j in range(len(vs)) if j != i]
            coeffs = {j: c for j, c in zip(idx, cs) if c != 0}
            return IndependenceResult(False, mode, {"index": i, "coefficients": coeffs})
    return IndependenceResult(True, mode)


# -- generating sets -----------------------------------------------------------


@dataclass(frozen=True)
class GeneratingSet:
    generators: tuple
    carrier_size: int

    @property
    def dimension(self) -> int:
        return len(self.generators)


def _module_for(c: CarrierSpec) -> int:
    if c.domain.kind != RESIDUES:
        raise BudgetExceeded(f"carrier over {c.domain.tag} is infinite; generating sets need a residue carrier")
    if not c.full_pool:
        raise ValueError("generating sets need the full residue pool")
    return c.domain.modulus


def find_generating_set(c: CarrierSpec, action: ScalarActionSpec = DEFAULT_ACTION, b: Budget = Budget()) -> GeneratingSet:
    """Greedy generating set, scanning candidates in lexicographic order."""
    n = _module_for(c)
    k = len(c.labels)
    target = c.size()
    gens: list = []
    mod = ResidueModule(n, k, [])
    if mod.size() == target:
        return GeneratingSet((), target)
    for scanned, m in enumerate(c.elements(), start=1):
        if scanned > b.exhaustive_limit:
            raise BudgetExceeded(f"scanned {b.exhaustive_limit} candidates without generating the carrier")
        v = c.coords(m)
        if not mod.contains(v):
            gens.append(m)
            mod = ResidueModule(n, k, [c.coords(g) for g in gens])
            if mod.size() == target:
                return GeneratingSet(tuple(gens), target)
    raise AssertionError("the whole carrier failed to generate itself")


# -- the independent-set-larger-than-basis demonstration --------------------------


@dataclass(frozen=True)
class BasisDemo:
    basis: tuple
    larger_independent: tuple
    basis_spans_slice: bool
    larger_is_independent: bool
    outside_witness: SuperIntervalMatrix | None
    slice_bound: int


def _standard_unit_rows(d, p):
    out = []
    for j in range(p.cols):
        out.append(SuperIntervalMatrix(d, p, (tuple(d.one if k == j else d.zero for k in range(p.cols)),)))
    return out


def independent_exceeds_basis_demo(
    basis=None, larger=None, action: ScalarActionSpec = DEFAULT_ACTION, b: Budget = Budget(), slice_bound: int = 3
) -> BasisDemo:
    """Exhibit an independent set strictly larger than a basis.

    Defaults to 1x4 nat row matrices with column cuts {1,3}: the standard
    unit rows form a basis of size 4, while five specific rows are
    independent yet fail to span.
    """
    from ..domains import NATURALS

    p = PartitionSpec(1, 4, (), (1, 3))
    if basis is None:
        basis = _standard_unit_rows(NATURALS, p)
    if larger is None:
        rows = [(1, 1, 3, 0), (0, 4, 7, 0), (0, 0, 0, 5), (1, 0, 0, 2), (0, 9, 0, 13)]
        larger = [SuperIntervalMatrix(NATURALS, p, (r,)) for r in rows]
    d, p = _frame(list(basis) + list(larger))
    spans_all = True
    outside = None
    for vals in product(range(slice_bound + 1), repeat=p.rows * p.cols):
        v = _unflat(d, p, vals)
        if in_span(v, basis, action, b) is None:
            spans_all = False
        if outside is None and in_span(v, larger, action, b) is None:
            outside = v
    indep = bool(is_independent(larger, action, "combination", b)) and bool(
        is_independent(larger, action, "pairwise", b)
    )
    return BasisDemo(tuple(basis), tuple(larger), spans_all, indep, outside, slice_bound)


# -- direct sums -----------------------------------------------------------------


def check_direct_sum(parts, whole: CarrierSpec, action: ScalarActionSpec = DEFAULT_ACTION, b: Budget = Budget()) -> StructureReport:
    """Do the spans of ``parts`` cover ``whole``, and do they overlap only in 0?

    Covering with pairwise trivial intersections is a direct sum; covering
    with some nontrivial overlap is a pseudo direct sum.
    """
    r = StructureReport("direct sum decomposition", carrier_size=whole.size())
    if whole.domain.kind != RESIDUES or not whole.full_pool:
        for key in ("covers", "pairwise-trivial"):
            r.add(key, Verdict(INAPPLICABLE, note="decompositions are checked over full residue carriers"))
        r.details["classification"] = "unknown"
        return r
    n, k = whole.domain.modulus, len(whole.labels)
    mods = []
    for idx, gens in enumerate(parts):
        coords = []
        for g in gens:
            try:
                coords.append(whole.coords(g))
            except GeneratorOutsideCarrier as exc:
                raise GeneratorOutsideCarrier(f"part {idx + 1}: {exc}") from None
        mods.append(ResidueModule(n, k, coords))
    total = ResidueModule(n, k, [g for m in mods for g in m.gens])
    r.details["part sizes"] = [m.size() for m in mods]
    r.details["sum size"] = total.size()

    if total.size() == whole.size():
        r.add("covers", Verdict(HOLDS_EXHAUSTIVE, note="sum of the parts is the whole carrier"))
    else:
        missing = next(e for e in (tuple(int(i == j) for j in range(k)) for i in range(k)) if not total.contains(e))
        r.add("covers", Verdict(FAILS, (whole.matrix(missing),), "element outside every sum of parts"))

    overlaps = []
    for (i, a), (j, bm) in combinations(enumerate(mods), 2):
        inter = a.intersection(bm)
        if not inter.is_trivial():
            w = whole.matrix(inter.nonzero_element())
            overlaps.append((i + 1, j + 1, w, inter.size()))
    if overlaps:
        i, j, w, _ = overlaps[0]
        r.add("pairwise-trivial", Verdict(FAILS, (w,), f"parts {i} and {j} share a nonzero element"))
    else:
        r.add("pairwise-trivial", Verdict(HOLDS_EXHAUSTIVE, note="every pair of parts meets only in zero"))
    r.details["overlaps"] = [f"parts {i} and {j} share {size} elements" for i, j, _, size in overlaps]
    r.details["overlap witnesses"] = [w for _, _, w, _ in overlaps]

    product_size = 1
    for m in mods:
        product_size *= m.size()
    r.details["independent sum"] = product_size == total.size()
    covers = r["covers"].holds
    if covers and not overlaps:
        r.details["classification"] = "direct"
    elif covers:
        r.details["classification"] = "pseudo-direct"
    else:
        r.details["classification"] = "neither"
    return r


# -- ideals ---------------------------------------------------------------------


def _indicator(c: CarrierSpec, lab_index: int) -> SuperIntervalMatrix:
    coords = [c.domain.zero] * len(c.labels)
    coords[lab_index] = c.domain.one
    return c.matrix(coords)


def check_ideal(generators, c: CarrierSpec, b: Budget = Budget()) -> StructureReport:
    """Is the additive closure I of ``generators`` absorbing: r*i in I for r in C?

    The product is bilinear and the carrier is additively generated by its
    label indicator matrices, so over full residue and nat carriers it is
    enough to test indicator * generator for every pair.  Other carriers are
    sampled.
    """
    gens = list(generators)
    for g in gens:
        if not c.contains(g):
            raise GeneratorOutsideCarrier(f"generator {g.flat()} is not in the carrier")
    r = StructureReport("ideal generated under addition", carrier_size=c.size())
    d = c.domain
    if not gens or all(g.is_zero() for g in gens):
        r.add("absorbs", Verdict(HOLDS_STRUCTURAL, note="the zero submodule absorbs every product"))
        return r

    def member(m):
        return in_span(m, gens) is not None

    if (d.kind == RESIDUES and c.full_pool) or d.kind == NAT:
        for li in range(len(c.labels)):
            e = _indicator(c, li)
            for g in gens:
                prod_ = hadamard(e, g)
                if not member(prod_):
                    r.add("absorbs", Verdict(FAILS, (e, g, prod_), "product leaves the generated set"))
                    return r
        status = HOLDS_EXHAUSTIVE if d.kind == RESIDUES else HOLDS_STRUCTURAL
        r.add("absorbs", Verdict(status, note="indicator times generator stays inside, extended by bilinearity"))
        return r

    rng = b.rng()
    r.seed, r.sample_count = b.seed, b.sample_count
    for _ in range(b.sample_count):
        x = c.sample(rng)
        cs = [rng.randint(0, 3) for _ in gens]
        i = combine(cs, gens)
        prod_ = hadamard(x, i)
        if not member(prod_):
            r.add("absorbs", Verdict(FAILS, (x, i, prod_), "product leaves the generated set"))
            return r
    r.add("absorbs", Verdict(HOLDS_SAMPLED, note=f"seed {b.seed}, {b.sample_count} samples"))
    return r
