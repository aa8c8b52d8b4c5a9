"""Exact scalars: rationals, dyadic rationals and the two infinite endpoints.

Rationals are plain :class:`fractions.Fraction` values, which are always kept
in lowest terms with a positive denominator.  An *extended point* is either a
rational (``int``, ``Fraction`` or :class:`Dyadic`) or one of the sentinels
``NEG_INF`` / ``POS_INF``.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import InputError

__all__ = [
    "Fraction",
    "Dyadic",
    "Infinity",
    "NEG_INF",
    "POS_INF",
    "ExtendedPoint",
    "sign",
    "midpoint",
    "as_fraction",
    "format_rational",
    "parse_rational",
    "parse_point",
    "format_point",
]


def sign(q) -> int:
    """Return -1, 0 or +1 according to the sign of ``q``."""
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


@functools.total_ordering
@dataclass(frozen=True)
class Dyadic:
    """The number ``mantissa * 2**exponent``.

    Stored normalized: the mantissa is odd, or the value is zero with exponent 0.
    """

    mantissa: int
    exponent: int = 0

    def __post_init__(self):
        m, e = self.mantissa, self.exponent
        if m == 0:
            e = 0
        else:
            tz = (m & -m).bit_length() - 1
            m >>= tz
            e += tz
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exponent", e)

    @classmethod
    def from_rational(cls, q) -> "Dyadic":
        if isinstance(q, Dyadic):
            return q
        q = Fraction(q)
        den = q.denominator
        if den & (den - 1):
            raise ValueError(f"{q} is not a dyadic rational")
        return cls(q.numerator, -(den.bit_length() - 1))

    def to_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.mantissa << self.exponent)
        return Fraction(self.mantissa, 1 << -self.exponent)

    def _align(self, other: "Dyadic"):
        e = min(self.exponent, other.exponent)
        return self.mantissa << (self.exponent - e), other.mantissa << (other.exponent - e), e

    def __add__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        a, b, e = self._align(other)
        return Dyadic(a + b, e)

    __radd__ = __add__

    def __neg__(self):
        return Dyadic(-self.mantissa, self.exponent)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return Dyadic(self.mantissa * other.mantissa, self.exponent + other.exponent)

    __rmul__ = __mul__

    def half(self) -> "Dyadic":
        return Dyadic(self.mantissa, self.exponent - 1)

    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self.mantissa == other.mantissa and self.exponent == other.exponent
        if isinstance(other, (int, Fraction)):
            return self.to_fraction() == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Dyadic):
            a, b, _ = self._align(other)
            return a < b
        if isinstance(other, (int, Fraction)):
            return self.to_fraction() < other
        return NotImplemented

    def __hash__(self):
        return hash(self.to_fraction())

    def __str__(self):
        return format_rational(self.to_fraction())

    def __repr__(self):
        return f"Dyadic({self})"


def midpoint(a: Dyadic, b: Dyadic) -> Dyadic:
    """Exact average of two dyadics."""
    return (Dyadic.from_rational(a) + Dyadic.from_rational(b)).half()


@functools.total_ordering
class Infinity:
    """One of the two points at infinity; compares beyond every rational."""

    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __eq__(self, other):
        return isinstance(other, Infinity) and other.sign == self.sign

    def __hash__(self):
        return hash(("inf", self.sign))

    def __lt__(self, other):
        if isinstance(other, Infinity):
            return self.sign < other.sign
        if isinstance(other, (Rational, Dyadic)):
            return self.sign < 0
        return NotImplemented

    def __neg__(self):
        return NEG_INF if self.sign > 0 else POS_INF

    def __repr__(self):
        return "POS_INF" if self.sign > 0 else "NEG_INF"

    def __str__(self):
        return "inf" if self.sign > 0 else "-inf"

    def __reduce__(self):
        return (Infinity, (self.sign,))


NEG_INF = Infinity(-1)
POS_INF = Infinity(1)

ExtendedPoint = Union[int, Fraction, Dyadic, Infinity]


def as_fraction(q) -> Fraction:
    if isinstance(q, Dyadic):
        return q.to_fraction()
    if isinstance(q, Infinity):
        raise TypeError("infinite point has no rational value")
    return Fraction(q)


def format_rational(q) -> str:
    """``"p/q"`` with the denominator omitted when it is 1."""
    q = as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def parse_rational(text: str) -> Fraction:
    """Parse ``"7"``, ``"-3/2"`` and the like.  Decimal points are rejected."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise InputError(f"not an exact rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise InputError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def parse_point(text: str) -> ExtendedPoint:
    """Parse a rational or one of ``inf``, ``+inf``, ``-inf``."""
    t = text.strip().lower()
    if t in ("inf", "+inf", "infinity", "+infinity"):
        return POS_INF
    if t in ("-inf", "-infinity"):
        return NEG_INF
    return parse_rational(text)


def format_point(p: ExtendedPoint) -> str:
    if isinstance(p, Infinity):
        return str(p)
    return format_rational(p)
