"""Buchberger's algorithm, normal forms and standard monomials of zero-dimensional ideals."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .errors import AllZeroGenerators, NotZeroDimensional
from .linalg import Matrix
from .multipoly import (
    GREVLEX,
    Monomial,
    MonomialOrder,
    MultiPoly,
    divides,
    lcm,
    mono_div,
    mono_str,
)

__all__ = [
    "GroebnerBasis",
    "buchberger",
    "normal_form",
    "s_polynomial",
    "standard_basis",
    "QuotientRing",
]


def _reduce(f: MultiPoly, divisors: Sequence[MultiPoly], leads: Sequence[Monomial], order: MonomialOrder) -> MultiPoly:
    """Full multivariate division remainder, always attacking the largest remaining term."""
    key = order.key
    p: Dict[Monomial, Fraction] = dict(f.terms)
    r: Dict[Monomial, Fraction] = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for g, lm in zip(divisors, leads):
            if divides(lm, m):
                q = mono_div(m, lm)
                t = c / g.terms[lm]
                for e, a in g.terms.items():
                    e2 = tuple(x + y for x, y in zip(e, q))
                    v = p.get(e2, 0) - t * a
                    if v:
                        p[e2] = v
                    else:
                        del p[e2]
                break
        else:
            r[m] = c
            del p[m]
    return MultiPoly._raw(r, f.vars)


def s_polynomial(f: MultiPoly, g: MultiPoly, order: MonomialOrder) -> MultiPoly:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    m = lcm(lf, lg)
    return f.mul_term(mono_div(m, lf), 1 / f.terms[lf]) - g.mul_term(mono_div(m, lg), 1 / g.terms[lg])


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Gröbner basis: interreduced generators with monic leading terms."""

    generators: Tuple[MultiPoly, ...]
    order: MonomialOrder = GREVLEX

    @property
    def vars(self) -> Tuple[str, ...]:
        return self.generators[0].vars

    @property
    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial(self.order) for g in self.generators]

    def reduce(self, f: MultiPoly) -> MultiPoly:
        return _reduce(f, self.generators, self.leading_monomials, self.order)

    def contains(self, f: MultiPoly) -> bool:
        return self.reduce(f).is_zero()

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __str__(self):
        return "{" + ", ".join(g.to_str(self.order) for g in self.generators) + "}"


def normal_form(f: MultiPoly, gb: GroebnerBasis) -> MultiPoly:
    """Remainder of ``f`` on division by ``gb``; no term is divisible by a leading monomial."""
    return gb.reduce(f)


def buchberger(gens: Sequence[MultiPoly], order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Pairs are processed smallest-lcm first; pairs with coprime leading
    monomials and pairs covered by the chain criterion are skipped.
    """
    G = [g.monic(order) for g in gens if not g.is_zero()]
    if not G:
        raise AllZeroGenerators("all generators are zero")
    key = order.key
    leads = [g.leading_monomial(order) for g in G]
    pending = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}

    def chain_skip(i, j, m):
        for k in range(len(G)):
            if k in (i, j) or not divides(leads[k], m):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                return True
        return False

    while pending:
        i, j = min(pending, key=lambda p: (key(lcm(leads[p[0]], leads[p[1]])), p))
        pending.discard((i, j))
        li, lj = leads[i], leads[j]
        m = lcm(li, lj)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        if chain_skip(i, j, m):
            continue
        h = _reduce(s_polynomial(G[i], G[j], order), G, leads, order)
        if h.is_zero():
            continue
        h = h.monic(order)
        n = len(G)
        G.append(h)
        leads.append(h.leading_monomial(order))
        pending.update((k, n) for k in range(n))

    # minimal basis: drop generators whose lead is divisible by another's
    keep = []
    for i, li in enumerate(leads):
        redundant = any(
            divides(leads[j], li) and (leads[j] != li or j < i)
            for j in range(len(G))
            if j != i
        )
        if not redundant:
            keep.append(i)
    minimal = [G[i] for i in keep]
    min_leads = [leads[i] for i in keep]

    reduced = []
    for idx, g in enumerate(minimal):
        others = [h for k, h in enumerate(minimal) if k != idx]
        olead = [l for k, l in enumerate(min_leads) if k != idx]
        reduced.append(_reduce(g, others, olead, order).monic(order))
    reduced.sort(key=lambda g: key(g.leading_monomial(order)))
    return GroebnerBasis(tuple(reduced), order)


def standard_basis(gb: GroebnerBasis) -> List[Monomial]:
    """Monomials not divisible by any leading monomial of ``gb``, in increasing order.

    Raises :class:`NotZeroDimensional` unless every variable has a pure power
    among the leading monomials.
    """
    leads = gb.leading_monomials
    if any(not any(lm) for lm in leads):
        return []  # unit ideal
    n = len(gb.vars)
    bounds = []
    for i in range(n):
        pure = [lm[i] for lm in leads if lm[i] and all(a == 0 for k, a in enumerate(lm) if k != i)]
        if not pure:
            raise NotZeroDimensional(f"no leading monomial is a pure power of {gb.vars[i]}")
        bounds.append(min(pure))
    monos = [
        e
        for e in itertools.product(*(range(b) for b in bounds))
        if not any(divides(lm, e) for lm in leads)
    ]
    monos.sort(key=gb.order.key)
    return monos


class QuotientRing:
    """``Q[vars] / I`` for a zero-dimensional ``I``, with its standard-monomial basis.

    The multiplication matrices of the variables are computed once here;
    column ``j`` of ``mult_matrices[i]`` holds the coordinates of
    ``x_i * basis[j]``.
    """

    def __init__(self, gb: GroebnerBasis):
        self.gb = gb
        self.order = gb.order
        self.vars = gb.vars
        self.basis: List[Monomial] = standard_basis(gb)
        self.index = {e: k for k, e in enumerate(self.basis)}
        self.dimension = len(self.basis)
        self.mult_matrices: List[Matrix] = [self._mult_matrix_var(i) for i in range(len(self.vars))]

    @classmethod
    def from_generators(cls, gens: Sequence[MultiPoly], order: MonomialOrder = GREVLEX) -> "QuotientRing":
        return cls(buchberger(gens, order))

    def normal_form(self, f: MultiPoly) -> MultiPoly:
        return self.gb.reduce(f)

    def coordinates(self, f: MultiPoly) -> List[Fraction]:
        """Coordinates of ``f mod I`` in the standard basis."""
        v = [Fraction(0)] * self.dimension
        for e, c in self.normal_form(f).terms.items():
            v[self.index[e]] = c
        return v

    def element(self, coords: Sequence) -> MultiPoly:
        return MultiPoly({e: c for e, c in zip(self.basis, coords)}, self.vars)

    def basis_element(self, k: int) -> MultiPoly:
        return MultiPoly._raw({self.basis[k]: Fraction(1)}, self.vars)

    def basis_strings(self) -> List[str]:
        return [mono_str(e, self.vars) or "1" for e in self.basis]

    def _mult_matrix_var(self, i: int) -> Matrix:
        d = self.dimension
        M = [[Fraction(0)] * d for _ in range(d)]
        for j, e in enumerate(self.basis):
            e2 = list(e)
            e2[i] += 1
            col = self.coordinates(MultiPoly._raw({tuple(e2): Fraction(1)}, self.vars))
            for r in range(d):
                M[r][j] = col[r]
        return M

    def __repr__(self):
        return f"QuotientRing(vars={self.vars}, dimension={self.dimension})"
