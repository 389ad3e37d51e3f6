"""The special interval [0, a], stored as its upper endpoint."""

from __future__ import annotations

from dataclasses import dataclass

from .domains import UNIT, ScalarDomain, Value
from .errors import DomainMismatch, DomainOverflow


@dataclass(frozen=True)
class Interval:
    upper: Value
    domain: ScalarDomain

    def __post_init__(self):
        object.__setattr__(self, "upper", self.domain.check(self.upper))

    def __str__(self):
        return f"[0,{self.domain.format_value(self.upper)}]"

    @classmethod
    def zero(cls, domain: ScalarDomain) -> "Interval":
        return cls(domain.zero, domain)

    @classmethod
    def unit(cls, domain: ScalarDomain) -> "Interval":
        return cls(domain.one, domain)


def _domain_of(x: Interval, y: Interval) -> ScalarDomain:
    if x.domain != y.domain:
        raise DomainMismatch(f"cannot combine {x.domain.tag} and {y.domain.tag} intervals")
    return x.domain


def ivl_add(x: Interval, y: Interval) -> Interval:
    d = _domain_of(x, y)
    if d.kind == UNIT:
        raise DomainOverflow("fuzzy intervals are composed with min/max, not added")
    return Interval(d.add(x.upper, y.upper), d)


def ivl_mul(x: Interval, y: Interval) -> Interval:
    d = _domain_of(x, y)
    return Interval(d.mul(x.upper, y.upper), d)


def ivl_min(x: Interval, y: Interval) -> Interval:
    d = _domain_of(x, y)
    return Interval(d.min(x.upper, y.upper), d)


def ivl_max(x: Interval, y: Interval) -> Interval:
    d = _domain_of(x, y)
    return Interval(d.max(x.upper, y.upper), d)
