"""Exact scalar domains for interval endpoints.

Four coefficient worlds are supported: residues mod n (``z<n>``), the
nonnegative integers (``nat``), the nonnegative rationals (``qplus``) and
the rational unit interval (``unit``).  Integers are kept as ``int``,
rationals as ``fractions.Fraction``; nothing here ever touches a float.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import (
    DomainMismatch,
    DomainOverflow,
    InvalidEndpoint,
    UnorderedDomain,
)

Value = Union[int, Fraction]

RESIDUES = "residues"
NAT = "nat"
QPLUS = "qplus"
UNIT = "unit"

_DECIMAL = re.compile(r"^\d*\.\d+$|^\d+\.\d*$")
_FRACTION = re.compile(r"^\d+/\d+$")
_INTEGER = re.compile(r"^\d+$")


@dataclass(frozen=True)
class ScalarDomain:
    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == RESIDUES:
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise ValueError(f"residue modulus must be an integer >= 2, got {self.modulus!r}")
        elif self.kind in (NAT, QPLUS, UNIT):
            if self.modulus is not None:
                raise ValueError(f"domain {self.kind} takes no modulus")
        else:
            raise ValueError(f"unknown domain kind {self.kind!r}")

    # -- naming ---------------------------------------------------------

    @property
    def tag(self) -> str:
        if self.kind == RESIDUES:
            return f"z{self.modulus}"
        return self.kind

    def __str__(self):
        return self.tag

    @property
    def ordered(self) -> bool:
        return self.kind != RESIDUES

    @property
    def integral(self) -> bool:
        return self.kind in (RESIDUES, NAT)

    @property
    def finite(self) -> bool:
        return self.kind == RESIDUES

    @property
    def zero(self) -> Value:
        return 0 if self.integral else Fraction(0)

    @property
    def one(self) -> Value:
        return 1 if self.integral else Fraction(1)

    # -- validation -----------------------------------------------------

    def is_valid(self, v) -> bool:
        if isinstance(v, bool):
            return False
        if self.integral:
            if not isinstance(v, int):
                if isinstance(v, Fraction) and v.denominator == 1:
                    v = v.numerator
                else:
                    return False
            if self.kind == RESIDUES:
                return 0 <= v < self.modulus
            return v >= 0
        if not isinstance(v, (int, Fraction)):
            return False
        if self.kind == UNIT:
            return 0 <= v <= 1
        return v >= 0

    def check(self, v) -> Value:
        """Return ``v`` in canonical form, or raise InvalidEndpoint."""
        if not self.is_valid(v):
            raise InvalidEndpoint(f"{v!r} is not a valid endpoint in {self.tag}")
        if self.integral:
            return int(v)
        return Fraction(v)

    def elements(self):
        """All elements of a finite domain, in increasing order."""
        if self.kind != RESIDUES:
            raise ValueError(f"{self.tag} is infinite")
        return range(self.modulus)

    # -- arithmetic on raw values (callers guarantee validity) ------------

    def add(self, a: Value, b: Value) -> Value:
        s = a + b
        if self.kind == RESIDUES:
            return s % self.modulus
        if self.kind == UNIT and s > 1:
            raise DomainOverflow(f"{a} + {b} leaves the unit interval")
        return s

    def mul(self, a: Value, b: Value) -> Value:
        p = a * b
        if self.kind == RESIDUES:
            return p % self.modulus
        return p

    def neg(self, a: Value) -> Value:
        if self.kind != RESIDUES:
            raise DomainOverflow(f"{self.tag} has no additive inverses")
        return (-a) % self.modulus

    def min(self, a: Value, b: Value) -> Value:
        if not self.ordered:
            raise UnorderedDomain(f"{self.tag} carries no order; min/max undefined")
        return a if a <= b else b

    def max(self, a: Value, b: Value) -> Value:
        if not self.ordered:
            raise UnorderedDomain(f"{self.tag} carries no order; min/max undefined")
        return a if a >= b else b

    # -- text -----------------------------------------------------------

    def parse_value(self, text: str) -> Value:
        """Parse an endpoint literal.  Decimals become exact fractions."""
        t = text.strip()
        if _INTEGER.match(t):
            v: Value = int(t)
        elif self.integral:
            raise InvalidEndpoint(f"{text!r} is not an integer endpoint for {self.tag}")
        elif _FRACTION.match(t):
            num, den = t.split("/")
            if int(den) == 0:
                raise InvalidEndpoint(f"zero denominator in {text!r}")
            v = Fraction(int(num), int(den))
        elif _DECIMAL.match(t):
            v = Fraction(t)
        else:
            raise InvalidEndpoint(f"cannot read {text!r} as an endpoint")
        return self.check(v)

    def format_value(self, v: Value, decimals: bool = False) -> str:
        if self.integral:
            return str(v)
        v = Fraction(v)
        if v.denominator == 1:
            return str(v.numerator)
        if decimals:
            d = as_decimal(v)
            if d is not None:
                return d
        return f"{v.numerator}/{v.denominator}"


def as_decimal(v: Fraction) -> str | None:
    """Terminating decimal expansion of ``v``, or None if it does not terminate."""
    den = v.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return None
    places = max(twos, fives)
    scaled = v.numerator * 10 ** places // v.denominator
    whole, frac = divmod(scaled, 10 ** places)
    if places == 0:
        return str(whole)
    return f"{whole}.{str(frac).rjust(places, '0').rstrip('0')}"


def parse_domain(tag: str) -> ScalarDomain:
    t = tag.strip().lower()
    if t in (NAT, QPLUS, UNIT):
        return ScalarDomain(t)
    m = re.fullmatch(r"z(\d+)", t)
    if m:
        n = int(m.group(1))
        if n < 2:
            raise ValueError(f"residue modulus must be >= 2 in {tag!r}")
        return ScalarDomain(RESIDUES, n)
    raise ValueError(f"unknown domain tag {tag!r} (expected z<n>, nat, qplus or unit)")


def residues(n: int) -> ScalarDomain:
    return ScalarDomain(RESIDUES, n)


NATURALS = ScalarDomain(NAT)
NONNEG_RATIONALS = ScalarDomain(QPLUS)
UNIT_RATIONALS = ScalarDomain(UNIT)


@dataclass(frozen=True)
class Scalar:
    """A value tagged with the domain it lives in."""

    value: Value
    domain: ScalarDomain

    def __post_init__(self):
        object.__setattr__(self, "value", self.domain.check(self.value))

    def __str__(self):
        return self.domain.format_value(self.value)


def scalar(value, domain: ScalarDomain | str) -> Scalar:
    if isinstance(domain, str):
        domain = parse_domain(domain)
    if isinstance(value, str):
        value = domain.parse_value(value)
    elif domain.kind == RESIDUES and isinstance(value, int):
        value = value % domain.modulus
    return Scalar(value, domain)


def _same(d: ScalarDomain, x: Scalar, y: Scalar):
    for s in (x, y):
        if s.domain != d:
            raise DomainMismatch(f"scalar {s} belongs to {s.domain.tag}, expected {d.tag}")


def scalar_add(d: ScalarDomain, x: Scalar, y: Scalar) -> Scalar:
    _same(d, x, y)
    return Scalar(d.add(x.value, y.value), d)


def scalar_mul(d: ScalarDomain, x: Scalar, y: Scalar) -> Scalar:
    _same(d, x, y)
    return Scalar(d.mul(x.value, y.value), d)


def scalar_min(d: ScalarDomain, x: Scalar, y: Scalar) -> Scalar:
    _same(d, x, y)
    return Scalar(d.min(x.value, y.value), d)


def scalar_max(d: ScalarDomain, x: Scalar, y: Scalar) -> Scalar:
    _same(d, x, y)
    return Scalar(d.max(x.value, y.value), d)
