"""Linearity checks for maps between carriers."""

from __future__ import annotations

from itertools import product
from typing import Callable, Mapping

from ..errors import MapUndefined
from ..matrix import SuperIntervalMatrix, add, scalar_mul
from .carrier import FAILS, HOLDS_EXHAUSTIVE, HOLDS_SAMPLED, Budget, CarrierSpec, ScalarActionSpec
from .report import StructureReport, Verdict


def as_callable(t) -> Callable:
    if isinstance(t, Mapping):
        table = dict(t)

        def apply(v):
            try:
                return table[v]
            except KeyError:
                raise MapUndefined(f"map has no entry for {v.flat()}") from None

        return apply
    if not callable(t):
        raise TypeError("map must be a callable or a mapping table")
    return t


def check_linear_map(
    t,
    src: CarrierSpec,
    dst: CarrierSpec,
    action: ScalarActionSpec = ScalarActionSpec(),
    b: Budget = Budget(),
) -> StructureReport:
    """Check T(a v + u) = a T(v) + T(u) and that images land in ``dst``."""
    f = as_callable(t)
    r = StructureReport("linear map", carrier_size=src.size())
    scalars = action.scalar_values(src.domain, b)
    exhaustive = (
        b.strategy == "auto" and src.finite and len(scalars) * src.size() ** 2 <= b.exhaustive_limit
    )
    if exhaustive:
        elems = list(src.elements())
        triples = ((a, v, u) for a in scalars for v, u in product(elems, repeat=2))
        singles = elems
    else:
        rng = b.rng()
        r.seed, r.sample_count = b.seed, b.sample_count
        triples = [(rng.choice(scalars), src.sample(rng), src.sample(rng)) for _ in range(b.sample_count)]
        singles = [v for _, v, _ in triples]

    done = "all triples" if exhaustive else f"seed {b.seed}, {b.sample_count} samples"
    status = HOLDS_EXHAUSTIVE if exhaustive else HOLDS_SAMPLED

    for v in singles:
        img = f(v)
        if not isinstance(img, SuperIntervalMatrix) or not dst.contains(img):
            r.add("image-in-codomain", Verdict(FAILS, (v, img), "image is not in the codomain"))
            break
    else:
        r.add("image-in-codomain", Verdict(status, note=done))

    for a, v, u in triples:
        lhs = f(add(scalar_mul(a, v), u))
        rhs = add(scalar_mul(a, f(v)), f(u))
        if lhs != rhs:
            r.add("linearity", Verdict(FAILS, (a, v, u), "T(a v + u) differs from a T(v) + T(u)"))
            return r
    r.add("linearity", Verdict(status, note=done))
    return r
