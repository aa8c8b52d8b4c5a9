"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .arith import Dyadic, Infinity, as_fraction, format_rational, sign
from .errors import BothZero, DivisionByZeroPoly, ZeroPolynomial

__all__ = ["UniPoly", "gcd", "squarefree_part", "eval_sign", "ext_gcd"]


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class UniPoly:
    """Polynomial ``sum(coeffs[i] * var**i)``.

    ``coeffs`` is indexed by exponent and never has trailing zeros, so the zero
    polynomial is the empty tuple.  Instances are immutable.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        self.coeffs = _trim([Fraction(c) for c in coeffs])
        self.var = var

    @classmethod
    def _raw(cls, coeffs, var):
        p = cls.__new__(cls)
        p.coeffs = _trim(coeffs)
        p.var = var
        return p

    @classmethod
    def monomial(cls, coeff, exp: int, var: str = "x") -> "UniPoly":
        return cls([0] * exp + [coeff], var)

    @classmethod
    def gen(cls, var: str = "x") -> "UniPoly":
        return cls([0, 1], var)

    @classmethod
    def from_roots(cls, roots: Iterable, var: str = "x") -> "UniPoly":
        p = cls([1], var)
        for r in roots:
            p = p * cls([-Fraction(r), 1], var)
        return p

    # -- basic queries -----------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([Fraction(other)])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly._raw([Fraction(other)], self.var)
        return None

    # -- ring operations ---------------------------------------------------
    def __neg__(self):
        return UniPoly._raw([-c for c in self.coeffs], self.var)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly._raw(out, self.var)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return UniPoly._raw([c * a for a in self.coeffs], self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly._raw((), self.var)
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly._raw(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = UniPoly._raw([Fraction(1)], self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        """Division by a scalar, or exact division by a polynomial."""
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                raise ZeroDivisionError("division by zero scalar")
            return UniPoly._raw([a / c for a in self.coeffs], self.var)
        if isinstance(other, UniPoly):
            q, r = divmod(self, other)
            if r:
                raise ValueError("polynomial division is not exact")
            return q
        return NotImplemented

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        r = list(self.coeffs)
        db = other.degree
        lb = other.lead
        b = other.coeffs
        if len(r) <= db:
            return UniPoly._raw((), self.var), UniPoly._raw(r, self.var)
        q = [Fraction(0)] * (len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if not c:
                continue
            c = c / lb
            q[k - db] = c
            off = k - db
            for j in range(db + 1):
                r[off + j] -= c * b[j]
        return UniPoly._raw(q, self.var), UniPoly._raw(r[:db], self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- calculus / evaluation --------------------------------------------
    def derivative(self) -> "UniPoly":
        return UniPoly._raw([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, x):
        """Horner evaluation.  ``x`` may be a rational, a Dyadic or a UniPoly."""
        if isinstance(x, Dyadic):
            x = x.to_fraction()
        acc = Fraction(0) if not isinstance(x, UniPoly) else UniPoly._raw((), x.var)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self / self.lead

    def reflect(self) -> "UniPoly":
        """``f(-x)``."""
        return UniPoly._raw([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)], self.var)

    def with_var(self, var: str) -> "UniPoly":
        return UniPoly._raw(self.coeffs, var)

    # -- printing ----------------------------------------------------------
    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c:
                parts.append(_term_str(c, _mono_str(self.var, i)))
        return _join_terms(parts)

    def __repr__(self):
        return f"UniPoly({str(self)!r}, var={self.var!r})"


def _mono_str(var, e):
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def _term_str(c: Fraction, mono: str):
    """Signed term text: returns (is_negative, body)."""
    neg = c < 0
    a = -c if neg else c
    if not mono:
        return neg, format_rational(a)
    if a == 1:
        return neg, mono
    return neg, f"{format_rational(a)}*{mono}"


def _join_terms(parts):
    out = []
    for k, (neg, body) in enumerate(parts):
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


def gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor."""
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    a, b = f, g
    while b:
        a, b = b, a % b
    return a.monic()


def ext_gcd(f: UniPoly, g: UniPoly):
    """Return ``(d, s, t)`` with ``d = s*f + t*g`` and ``d`` the monic gcd."""
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    one = UniPoly([1], f.var)
    zero = UniPoly((), f.var)
    r0, r1, s0, s1, t0, t1 = f, g, one, zero, zero, one
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.lead
    return r0 / lc, s0 / lc, t0 / lc


def squarefree_part(f: UniPoly) -> UniPoly:
    """``f / gcd(f, f')`` made monic: same roots as ``f``, all simple."""
    if f.is_zero():
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    if f.is_constant():
        return UniPoly([1], f.var)
    return (f / gcd(f, f.derivative())).monic()


def eval_sign(f: UniPoly, a) -> int:
    """Sign of ``f(a)``; at ``±inf`` this is the sign of the leading term there."""
    if isinstance(a, Infinity):
        if f.is_zero():
            return 0
        s = sign(f.lead)
        if a.sign < 0 and f.degree % 2:
            s = -s
        return s
    return sign(f(as_fraction(a)))

