"""Linear algebra on the quotient ring of a zero-dimensional ideal.

Multiplication operators, eliminants, trace forms with their rank and
signature, point counts and rational univariate representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple

from .errors import DomainError, SearchExhausted
from .groebner import QuotientRing
from .linalg import Matrix, char_poly, identity, is_symmetric, matmul, min_poly, rank as _rank, trace, zeros
from .multipoly import Monomial, MultiPoly
from .unipoly import UniPoly, ext_gcd, squarefree_part
from .univariate import variations

__all__ = [
    "regular_representation",
    "char_poly",
    "min_poly",
    "univariate_eliminant",
    "trace_form",
    "rank",
    "signature",
    "trace_count",
    "real_count",
    "trace_signature",
    "RurTriple",
    "rational_univariate_representation",
    "compose_numerator",
]


class _MonomialMatrices:
    """Memoized matrices of monomials, built from the cached variable matrices."""

    def __init__(self, R: QuotientRing):
        self.R = R
        n = len(R.vars)
        self.memo: Dict[Monomial, Matrix] = {(0,) * n: identity(R.dimension)}

    def __call__(self, e: Monomial) -> Matrix:
        M = self.memo.get(e)
        if M is None:
            i = max(k for k, a in enumerate(e) if a)
            prev = list(e)
            prev[i] -= 1
            M = matmul(self(tuple(prev)), self.R.mult_matrices[i])
            self.memo[e] = M
        return M


def regular_representation(f: MultiPoly, R: QuotientRing) -> Matrix:
    """Matrix of multiplication by ``f`` on ``R`` in its standard basis (columns are images)."""
    d = R.dimension
    mono = _MonomialMatrices(R)
    out = zeros(d)
    for e, c in f.terms.items():
        M = mono(e)
        for i in range(d):
            row, src = out[i], M[i]
            for j in range(d):
                if src[j]:
                    row[j] += c * src[j]
    return out


def univariate_eliminant(f: MultiPoly, R: QuotientRing, var: str = "Z") -> UniPoly:
    """Minimal polynomial of multiplication by ``f``: the generator of the kernel of ``Z -> f``."""
    return min_poly(regular_representation(f, R), var)


def _basis_traces(R: QuotientRing) -> List[Fraction]:
    mono = _MonomialMatrices(R)
    return [trace(mono(e)) for e in R.basis]


def trace_form(h: MultiPoly, R: QuotientRing) -> Matrix:
    """Symmetric matrix with entries ``trace(m_{b_i b_j h})`` over the standard basis ``b``."""
    d = R.dimension
    tr = _basis_traces(R)
    h_nf = R.normal_form(h)
    S = zeros(d)
    for i in range(d):
        bi_h = h_nf.mul_term(R.basis[i], Fraction(1))
        for j in range(i, d):
            coords = R.coordinates(bi_h.mul_term(R.basis[j], Fraction(1)))
            s = sum((c * t for c, t in zip(coords, tr) if c), Fraction(0))
            S[i][j] = S[j][i] = s
    return S


def rank(S: Matrix) -> int:
    return _rank(S)


def signature(S: Matrix) -> int:
    """Positive minus negative eigenvalues of a symmetric matrix.

    A real symmetric matrix has a real-rooted characteristic polynomial, so
    Descartes' rule counts its positive and negative roots exactly.
    """
    if not is_symmetric(S):
        raise ValueError("signature needs a symmetric matrix")
    p = char_poly(S)
    return variations(p.coeffs) - variations(p.reflect().coeffs)


def trace_count(R: QuotientRing) -> int:
    """Number of distinct points of the variety over the algebraic closure."""
    return rank(trace_form(MultiPoly.constant(1, R.vars), R))


def real_count(R: QuotientRing) -> int:
    """Number of distinct real points of the variety."""
    return signature(trace_form(MultiPoly.constant(1, R.vars), R))


def trace_signature(h: MultiPoly, R: QuotientRing) -> int:
    return signature(trace_form(h, R))


@dataclass(frozen=True)
class RurTriple:
    """Separating linear form, its characteristic polynomial and the coordinate maps.

    At each root ``t`` of ``squarefree_char_poly``, the point of the variety is
    ``numerator_i(t) / denominator(t)`` for every variable ``i``.
    """

    sep_form: MultiPoly
    char_poly: UniPoly
    squarefree_char_poly: UniPoly
    vars: Tuple[str, ...]
    numerators: Tuple[UniPoly, ...]
    denominator: UniPoly

    @property
    def coord_maps(self) -> List[Tuple[str, UniPoly, UniPoly]]:
        return [(v, num, self.denominator) for v, num in zip(self.vars, self.numerators)]

    def point_at(self, t) -> Tuple[Fraction, ...]:
        """Coordinates at a rational root ``t`` of the squarefree characteristic polynomial."""
        den = self.denominator(t)
        return tuple(num(t) / den for num in self.numerators)

    def as_dict(self) -> dict:
        return {
            "separating_form": str(self.sep_form),
            "char_poly": str(self.char_poly),
            "coords": [
                {"var": v, "numerator": str(num), "denominator": str(self.denominator)}
                for v, num in zip(self.vars, self.numerators)
            ],
        }


def _candidate_shifts(bound: int) -> Iterator[int]:
    yield 0
    for c in range(1, bound + 1):
        yield c
        yield -c


def compose_numerator(F: MultiPoly, rur: RurTriple) -> UniPoly:
    """Numerator of ``F(num_1/den, ..., num_n/den)`` reduced modulo the squarefree characteristic polynomial.

    The numerator is ``sum c_e * prod(num_i^e_i) * den^(D - |e|)`` with ``D``
    the total degree of ``F``; it vanishes mod ``chi`` iff ``F`` vanishes at
    every parametrized point, since ``den`` is a unit there.
    """
    chi = rur.squarefree_char_poly
    T = chi.var
    D = max(F.total_degree, 0)
    den_pows = [UniPoly([1], T)]
    for _ in range(D):
        den_pows.append((den_pows[-1] * rur.denominator) % chi)
    total = UniPoly((), T)
    for e, c in F.terms.items():
        t = den_pows[D - sum(e)] * c
        for num, a in zip(rur.numerators, e):
            for _ in range(a):
                t = (t * num) % chi
        total = total + t
    return total % chi


def rational_univariate_representation(R: QuotientRing, var: str = "T", bound: int = None) -> RurTriple:
    """Certified rational univariate representation of the points of ``R``.

    Tries linear forms ``x_1 + c x_2 + c^2 x_3 + ...`` for ``c = 0, 1, -1, 2, ...``
    and accepts the first whose characteristic polynomial has as many distinct
    roots as the trace form has rank (the number of points).
    """
    d = R.dimension
    if d == 0:
        raise DomainError("the unit ideal has no points to represent")
    n = len(R.vars)
    npoints = trace_count(R)
    if bound is None:
        bound = d * (d - 1) // 2 + 1

    for c in _candidate_shifts(bound):
        form = MultiPoly.linear_form([Fraction(c) ** i for i in range(n)], R.vars)
        M = regular_representation(form, R)
        chi = char_poly(M, var)
        chibar = squarefree_part(chi)
        if chibar.degree == npoints:
            break
    else:
        raise SearchExhausted(f"no separating form x_1 + c x_2 + ... with |c| <= {bound}")

    s = npoints
    a = chibar.coeffs
    # Horner truncations of chibar: H_0 = a_s, H_j = T*H_{j-1} + a_{s-j}
    T = UniPoly.gen(var)
    horner = [UniPoly([a[s]], var)]
    for j in range(1, s):
        horner.append(T * horner[-1] + a[s - j])

    powers = [identity(d)]
    for _ in range(1, s):
        powers.append(matmul(powers[-1], M))

    def weighted(Mv: Matrix) -> UniPoly:
        # sum_k trace(m_v m_form^k) * H_{s-1-k}
        acc = UniPoly((), var)
        for k in range(s):
            t = sum((Mv[i][r] * powers[k][r][i] for i in range(d) for r in range(d) if Mv[i][r]), Fraction(0))
            if t:
                acc = acc + horner[s - 1 - k] * t
        return acc

    g1 = weighted(identity(d))
    den = chibar.derivative()
    one, inv, _ = ext_gcd(g1, chibar)
    if one.degree != 0:  # pragma: no cover - g1 is a unit mod chibar in characteristic 0
        raise DomainError("trace polynomial is not invertible modulo the eliminant")
    scale = (inv * den) % chibar
    numerators = tuple((weighted(Mx) * scale) % chibar for Mx in R.mult_matrices)
    return RurTriple(
        sep_form=form,
        char_poly=chi,
        squarefree_char_poly=chibar,
        vars=tuple(R.vars),
        numerators=numerators,
        denominator=den,
    )
