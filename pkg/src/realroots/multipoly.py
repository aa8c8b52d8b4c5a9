"""Sparse multivariate polynomials over the rationals and monomial orders."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .arith import format_rational

Monomial = Tuple[int, ...]

__all__ = [
    "Monomial",
    "MonomialOrder",
    "GREVLEX",
    "LEX",
    "GRLEX",
    "order_by_name",
    "MultiPoly",
    "divides",
    "lcm",
    "mono_mul",
    "mono_div",
    "mono_str",
]


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def mono_div(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a - b for a, b in zip(u, v))


class MonomialOrder:
    """A term order, given by a sort key on exponent vectors (larger key = larger monomial)."""

    def __init__(self, name: str, key):
        self.name = name
        self.key = key

    def lt(self, u: Monomial, v: Monomial) -> bool:
        return self.key(u) < self.key(v)

    def __repr__(self):
        return f"MonomialOrder({self.name!r})"


GREVLEX = MonomialOrder("grevlex", lambda e: (sum(e), tuple(-a for a in reversed(e))))
LEX = MonomialOrder("lex", lambda e: tuple(e))
GRLEX = MonomialOrder("grlex", lambda e: (sum(e), tuple(e)))

_ORDERS = {"grevlex": GREVLEX, "lex": LEX, "grlex": GRLEX, "gradedlex": GRLEX}


def order_by_name(name: str) -> MonomialOrder:
    try:
        return _ORDERS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown monomial order {name!r}") from None


def mono_str(e: Monomial, names: Sequence[str]) -> str:
    """``x^2*y``; the empty string for the unit monomial."""
    parts = []
    for a, v in zip(e, names):
        if a == 1:
            parts.append(v)
        elif a > 1:
            parts.append(f"{v}^{a}")
    return "*".join(parts)


class MultiPoly:
    """Polynomial in the ordered variables ``vars``; ``terms`` maps exponent vectors to nonzero coefficients."""

    __slots__ = ("terms", "vars")

    def __init__(self, terms: Mapping[Monomial, object] = None, vars: Sequence[str] = ("x",)):
        self.vars = tuple(vars)
        n = len(self.vars)
        out: Dict[Monomial, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} does not match {n} variables")
            c = Fraction(c)
            if c:
                out[e] = out.get(e, Fraction(0)) + c
        self.terms = {e: c for e, c in out.items() if c}

    @classmethod
    def _raw(cls, terms, vars):
        p = cls.__new__(cls)
        p.terms = terms
        p.vars = vars
        return p

    @classmethod
    def constant(cls, c, vars: Sequence[str]) -> "MultiPoly":
        vars = tuple(vars)
        return cls({(0,) * len(vars): c}, vars)

    @classmethod
    def variable(cls, name: str, vars: Sequence[str]) -> "MultiPoly":
        vars = tuple(vars)
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls({tuple(e): 1}, vars)

    @classmethod
    def linear_form(cls, coeffs: Iterable, vars: Sequence[str]) -> "MultiPoly":
        vars = tuple(vars)
        n = len(vars)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(terms, vars)

    # -- queries ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> "MultiPoly":
        if not self.terms:
            return self
        c = self.leading_coefficient(order)
        return MultiPoly._raw({e: a / c for e, a in self.terms.items()}, self.vars)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return not self.terms
            return self.terms == {(0,) * len(self.vars): other}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.vars)
        return None

    # -- arithmetic --------------------------------------------------------
    def __neg__(self):
        return MultiPoly._raw({e: -c for e, c in self.terms.items()}, self.vars)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(out, self.vars)

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
            if not c:
                return MultiPoly._raw({}, self.vars)
            return MultiPoly._raw({e: a * c for e, a in self.terms.items()}, self.vars)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw({e: c for e, c in out.items() if c}, self.vars)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return MultiPoly._raw({e: a / c for e, a in self.terms.items()}, self.vars)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = MultiPoly.constant(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_term(self, e: Monomial, c: Fraction) -> "MultiPoly":
        return MultiPoly._raw({mono_mul(e, m): c * a for m, a in self.terms.items()}, self.vars)

    def __call__(self, *point):
        """Exact evaluation at a point given as one value per variable."""
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, a in zip(point, e):
                if a:
                    t *= Fraction(x) ** a
            total += t
        return total

    def substitute(self, values: Sequence, one=1):
        """Evaluate with arbitrary ring elements (polynomials, matrices via callers) for the variables."""
        total = None
        for e, c in self.terms.items():
            t = one * c
            for x, a in zip(values, e):
                if a:
                    t = t * x**a
            total = t if total is None else total + t
        return total if total is not None else one * 0

    # -- printing ----------------------------------------------------------
    def to_str(self, order: MonomialOrder = GREVLEX) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, e in enumerate(sorted(self.terms, key=order.key, reverse=True)):
            c = self.terms[e]
            neg = c < 0
            a = -c if neg else c
            m = mono_str(e, self.vars)
            if not m:
                body = format_rational(a)
            elif a == 1:
                body = m
            else:
                body = f"{format_rational(a)}*{m}"
            if k == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MultiPoly({self.to_str()!r}, vars={self.vars!r})"
