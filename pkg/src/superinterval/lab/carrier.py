"""Carriers: finite or sampled sets of same-type super interval matrices.

A carrier fixes a domain, a partition and an operation.  Two optional
refinements narrow it down:

* ``entry_pool``: the endpoint values allowed in every free position.  Over
  residues, and for min/max carriers, the pool *defines* the carrier
  (default: the whole residue ring).  For add/hadamard over nat or qplus the
  carrier is the whole infinite domain and the pool only feeds the sampler.
* ``pattern``: a grid of integer labels.  Label 0 pins a position to zero;
  positions sharing a label always carry the same endpoint.  This expresses
  constant matrices, block-supported submodules and similar sub-carriers.

Internally an element is a tuple of values, one per free label, with labels
ordered by first appearance in row-major order.  Enumerating the value tuples
lexicographically therefore enumerates the matrices in lexicographic order of
their endpoint grids.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from ..domains import NAT, QPLUS, RESIDUES, UNIT, ScalarDomain
from ..errors import CarrierEmpty, DomainOverflow, GeneratorOutsideCarrier, UnorderedDomain
from ..matrix import SuperIntervalMatrix
from ..partition import PartitionSpec

OPS = ("add", "hadamard", "min", "max")

HOLDS_EXHAUSTIVE = "holds-exhaustive"
HOLDS_SAMPLED = "holds-sampled"
HOLDS_STRUCTURAL = "holds-structural"
FAILS = "fails"
INAPPLICABLE = "inapplicable"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Budget:
    exhaustive_limit: int = 100_000
    sample_count: int = 1_000
    seed: int = 0
    coeff_bound: int = 32
    # "auto" picks exhaustive search when the carrier fits the limit;
    # "sample" forces seeded sampling even for small carriers.
    strategy: str = "auto"

    def __post_init__(self):
        if self.exhaustive_limit <= 0 or self.sample_count <= 0 or self.coeff_bound <= 0:
            raise ValueError("budget limits must be positive")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 bits")
        if self.strategy not in ("auto", "sample"):
            raise ValueError(f"unknown strategy {self.strategy!r}")

    def rng(self) -> random.Random:
        return random.Random(self.seed)


@dataclass(frozen=True)
class CarrierSpec:
    domain: ScalarDomain
    partition: PartitionSpec
    op: str = "add"
    entry_pool: tuple | None = None
    pattern: tuple | None = None
    labels: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        d = self.domain
        if self.op not in OPS:
            raise ValueError(f"unknown carrier operation {self.op!r}; expected one of {OPS}")
        if self.op in ("min", "max") and not d.ordered:
            raise UnorderedDomain(f"{self.op} needs an ordered domain, {d.tag} is not")
        if self.op in ("add", "hadamard") and d.kind == UNIT:
            raise DomainOverflow("fuzzy carriers compose with min or max only")
        if self.entry_pool is not None:
            pool = tuple(sorted(set(d.check(v) for v in self.entry_pool)))
            if not pool:
                raise CarrierEmpty("endpoint pool is empty")
            object.__setattr__(self, "entry_pool", pool)
        p = self.partition
        if self.pattern is None:
            pattern = tuple(tuple(i * p.cols + j + 1 for j in range(p.cols)) for i in range(p.rows))
        else:
            pattern = tuple(tuple(int(x) for x in r) for r in self.pattern)
            if len(pattern) != p.rows or any(len(r) != p.cols for r in pattern):
                raise ValueError("pattern dimensions do not match the partition")
        object.__setattr__(self, "pattern", pattern)
        seen = []
        for r in pattern:
            for lab in r:
                if lab != 0 and lab not in seen:
                    seen.append(lab)
        object.__setattr__(self, "labels", tuple(seen))

    # -- size and finiteness ----------------------------------------------

    @property
    def finite(self) -> bool:
        if self.domain.kind == RESIDUES or not self.labels:
            return True
        return self.entry_pool is not None and self.op in ("min", "max")

    @property
    def values(self) -> tuple | None:
        """The per-position value set when the carrier is finite."""
        if self.entry_pool is not None:
            return self.entry_pool
        if self.domain.kind == RESIDUES:
            return tuple(self.domain.elements())
        return None

    @property
    def full_pool(self) -> bool:
        return self.domain.kind == RESIDUES and self.values == tuple(range(self.domain.modulus))

    def size(self) -> int | None:
        if not self.finite:
            return None
        if not self.labels:
            return 1
        return len(self.values) ** len(self.labels)

    @property
    def arity_free(self) -> int:
        return len(self.labels)

    # -- converting between value tuples and matrices -----------------------

    def matrix(self, coords: Sequence) -> SuperIntervalMatrix:
        idx = {lab: k for k, lab in enumerate(self.labels)}
        z = self.domain.zero
        grid = tuple(tuple(z if lab == 0 else coords[idx[lab]] for lab in r) for r in self.pattern)
        return SuperIntervalMatrix(self.domain, self.partition, grid)

    def fill(self, value) -> SuperIntervalMatrix:
        return self.matrix([value] * len(self.labels))

    def coords(self, m: SuperIntervalMatrix) -> tuple:
        """Inverse of :meth:`matrix`; raises if ``m`` is not in the carrier."""
        if m.domain != self.domain:
            raise GeneratorOutsideCarrier(f"matrix lives in {m.domain.tag}, carrier in {self.domain.tag}")
        if m.partition != self.partition:
            raise GeneratorOutsideCarrier(f"matrix partition {m.partition} differs from carrier {self.partition}")
        out: dict = {}
        for r_pat, r_val in zip(self.pattern, m.endpoints):
            for lab, v in zip(r_pat, r_val):
                if lab == 0:
                    if v != 0:
                        raise GeneratorOutsideCarrier("nonzero endpoint at a position the carrier pins to zero")
                elif out.setdefault(lab, v) != v:
                    raise GeneratorOutsideCarrier("tied positions carry different endpoints")
        vals = tuple(out[lab] for lab in self.labels)
        if self.finite and any(v not in self.values for v in vals):
            raise GeneratorOutsideCarrier("endpoint outside the carrier's pool")
        return vals

    def contains(self, m: SuperIntervalMatrix) -> bool:
        try:
            self.coords(m)
        except GeneratorOutsideCarrier:
            return False
        return True

    def elements(self):
        """Lexicographic enumeration of a finite carrier."""
        if not self.finite:
            raise ValueError("carrier is infinite")
        if not self.labels:
            yield self.matrix(())
            return
        for t in product(self.values, repeat=len(self.labels)):
            yield self.matrix(t)

    # -- sampling -----------------------------------------------------------

    def sample_value(self, rng: random.Random):
        if self.entry_pool is not None:
            return rng.choice(self.entry_pool)
        return default_sample(self.domain, rng)

    def sample(self, rng: random.Random) -> SuperIntervalMatrix:
        return self.matrix([self.sample_value(rng) for _ in self.labels])

    # -- the carrier operation ----------------------------------------------

    def coord_op(self):
        d = self.domain
        return {"add": d.add, "hadamard": d.mul, "min": d.min, "max": d.max}[self.op]


def default_sample(d: ScalarDomain, rng: random.Random):
    if d.kind == RESIDUES:
        return rng.randrange(d.modulus)
    if d.kind == NAT:
        return rng.randint(0, 99)
    if d.kind == QPLUS:
        return Fraction(rng.randint(0, 99), rng.randint(1, 12))
    q = rng.randint(1, 12)
    return Fraction(rng.randint(0, q), q)


def matrix_op(op: str):
    from .. import fuzzy
    from ..matrix import add, hadamard

    return {"add": add, "hadamard": hadamard, "min": fuzzy.entry_min, "max": fuzzy.entry_max}[op]


@dataclass(frozen=True)
class ScalarActionSpec:
    """Who acts on a carrier, and under which axioms.

    ``scalars`` is None for the whole domain or a finite tuple of values.
    """

    kind: str = "type-I"
    scalars: tuple | None = None
    domain: ScalarDomain | None = None

    KINDS = ("type-I", "type-II", "set", "semigroup", "group")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown action kind {self.kind!r}")
        if self.scalars is not None:
            if not self.scalars:
                raise ValueError("scalar set must be nonempty")
            if self.domain is not None:
                object.__setattr__(self, "scalars", tuple(sorted(set(self.domain.check(s) for s in self.scalars))))
        if self.kind == "group" and self.domain is not None and self.domain.kind != RESIDUES:
            raise ValueError("group actions need a residue domain")

    @property
    def action_kind(self) -> str:
        return self.kind

    @property
    def scalar_set(self):
        """The finite scalar subset, or the whole domain when none was given."""
        return self.scalars if self.scalars is not None else self.domain

    def scalar_values(self, d: ScalarDomain, budget: Budget) -> tuple:
        """A finite list of scalars to try: the given set, all residues, or a bounded slice."""
        if self.scalars is not None:
            return tuple(d.check(s) for s in self.scalars)
        if d.kind == RESIDUES:
            return tuple(d.elements())
        if d.kind == NAT:
            return tuple(range(budget.coeff_bound + 1))
        if d.kind == QPLUS:
            return bounded_fractions(budget.coeff_bound)
        return bounded_fractions(budget.coeff_bound, unit=True)


def bounded_fractions(bound: int, unit: bool = False) -> tuple:
    out = {Fraction(p, q) for q in range(1, bound + 1) for p in range(0, (q if unit else bound) + 1)}
    return tuple(sorted(out))
