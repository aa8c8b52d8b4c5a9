"""Sign variations, Sylvester/Sturm sequences, root isolation and Hurwitz stability.

Extended points (``NEG_INF``, ``POS_INF`` or a rational) are accepted wherever
an endpoint is expected.  Intervals are half-open on the left, ``(a, b]``,
unless stated otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .arith import NEG_INF, POS_INF, Dyadic, ExtendedPoint, format_rational, midpoint, sign
from .errors import BadInterval, ConstantPolynomial, DegenerateSequence, ZeroPolynomial
from .linalg import det
from .unipoly import UniPoly, eval_sign, gcd, squarefree_part

__all__ = [
    "variations",
    "variations_at",
    "descartes_bound",
    "derivative_sequence",
    "budan_fourier_bound",
    "sylvester_sequence",
    "reduced_sylvester_sequence",
    "sylvester_count",
    "sturm_sequence",
    "sturm_count",
    "multiplicity_count",
    "IsolatingInterval",
    "cauchy_bound",
    "real_root_isolation",
    "hurwitz_matrix",
    "hurwitz_determinants",
    "is_hurwitz_stable",
]


def variations(seq) -> int:
    """Number of sign changes in ``seq`` once zeros are removed."""
    count = 0
    prev = 0
    for c in seq:
        s = sign(c)
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def variations_at(fs: Sequence[UniPoly], a: ExtendedPoint) -> int:
    return variations(eval_sign(f, a) for f in fs)


def _require_nonzero(f: UniPoly):
    if f.is_zero():
        raise ZeroPolynomial("polynomial is identically zero")


def _require_interval(a, b):
    if not a < b:
        raise BadInterval(f"need a < b, got a={a}, b={b}")


def descartes_bound(f: UniPoly) -> int:
    """Coefficient sign variations: an upper bound on positive roots, with even gap."""
    _require_nonzero(f)
    return variations(f.coeffs)


def derivative_sequence(f: UniPoly) -> List[UniPoly]:
    """``(f, f', f'', ..., f^(deg f))``."""
    seq = [f]
    while seq[-1].degree > 0:
        seq.append(seq[-1].derivative())
    return seq


def budan_fourier_bound(f: UniPoly, a: ExtendedPoint = NEG_INF, b: ExtendedPoint = POS_INF) -> int:
    _require_nonzero(f)
    _require_interval(a, b)
    ds = derivative_sequence(f)
    return variations_at(ds, a) - variations_at(ds, b)


def sylvester_sequence(f: UniPoly, g: UniPoly) -> List[UniPoly]:
    """Signed remainder sequence ``(f, f'g, ...)`` ending at ``gcd(f, f'g)`` up to scale.

    Each element is ``-remainder`` of the previous two; the first zero
    remainder ends the sequence and is not stored.
    """
    _require_nonzero(f)
    if not isinstance(g, UniPoly):
        g = UniPoly([g], f.var)
    f1 = f.derivative() * g
    if f1.is_zero():
        raise DegenerateSequence("f' * g is zero; the sequence is undefined")
    seq = [f, f1]
    while True:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            return seq
        seq.append(-r)


def reduced_sylvester_sequence(f: UniPoly, g: UniPoly) -> List[UniPoly]:
    """The Sylvester sequence divided through by its last element (so it ends in 1)."""
    seq = sylvester_sequence(f, g)
    last = seq[-1]
    return [p / last for p in seq]


def sturm_sequence(f: UniPoly) -> List[UniPoly]:
    return sylvester_sequence(f, UniPoly([1], f.var))


def _signed_count(f: UniPoly, g: UniPoly, a, b) -> int:
    if f.is_constant() or g.is_zero():
        return 0
    seq = reduced_sylvester_sequence(f, g)
    return variations_at(seq, a) - variations_at(seq, b)


def sylvester_count(
    f: UniPoly,
    g,
    a: ExtendedPoint = NEG_INF,
    b: ExtendedPoint = POS_INF,
    multiplicity: bool = False,
) -> int:
    """Roots of ``f`` in ``(a, b]`` where ``g > 0`` minus roots in ``[a, b)`` where ``g < 0``.

    With ``multiplicity`` every root is weighted by its multiplicity in ``f``:
    the same count is repeated on ``gcd(f, f')``, ``gcd`` of that with its
    derivative, and so on, and the results are summed.  Roots where ``g``
    vanishes contribute nothing either way.
    """
    _require_nonzero(f)
    _require_interval(a, b)
    if not isinstance(g, UniPoly):
        g = UniPoly([g], f.var)
    total = _signed_count(f, g, a, b)
    if multiplicity:
        h = f
        while h.degree > 0:
            h = gcd(h, h.derivative())
            total += _signed_count(h, g, a, b)
    return total


def sturm_count(
    f: UniPoly,
    a: ExtendedPoint = NEG_INF,
    b: ExtendedPoint = POS_INF,
    multiplicity: bool = False,
    left_closed: bool = False,
) -> int:
    """Number of real roots of ``f`` in ``(a, b]`` (``[a, b)`` when ``left_closed``)."""
    g = UniPoly([-1 if left_closed else 1], f.var)
    n = sylvester_count(f, g, a, b, multiplicity=multiplicity)
    return -n if left_closed else n


def multiplicity_count(f: UniPoly, a: ExtendedPoint = NEG_INF, b: ExtendedPoint = POS_INF, left_closed: bool = False) -> int:
    return sturm_count(f, a, b, multiplicity=True, left_closed=left_closed)


@dataclass(frozen=True)
class IsolatingInterval:
    """``(lo, hi]`` holding exactly one real root, of the given multiplicity."""

    lo: Dyadic
    hi: Dyadic
    multiplicity: int = 1

    @property
    def width(self) -> Fraction:
        return (self.hi - self.lo).to_fraction()

    def as_dict(self) -> dict:
        return {"lo": format_rational(self.lo), "hi": format_rational(self.hi), "multiplicity": self.multiplicity}


def cauchy_bound(f: UniPoly) -> Fraction:
    """``1 + max |c_i / c_k|``; every complex root has modulus strictly below it."""
    _require_nonzero(f)
    lc = f.lead
    return 1 + max((abs(c / lc) for c in f.coeffs[:-1]), default=Fraction(0))


def _power_of_two_at_least(q: Fraction) -> Dyadic:
    e = 0
    while Fraction(2) ** e < q:
        e += 1
    return Dyadic(1, e)


def real_root_isolation(f: UniPoly, tolerance=Fraction(1, 64)) -> List[IsolatingInterval]:
    """Disjoint dyadic intervals ``(lo, hi]``, one per distinct real root, sorted.

    Bisects ``(-B, B]`` with ``B`` a power of two above the Cauchy bound,
    counting roots of the squarefree part with its Sturm sequence, until every
    surviving interval holds one root and is narrower than ``tolerance``.
    """
    _require_nonzero(f)
    tolerance = Fraction(tolerance)
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    if f.is_constant():
        return []

    p = squarefree_part(f)
    if p.is_constant():
        return []
    seq = reduced_sylvester_sequence(p, UniPoly([1], p.var))

    def var_at(t):
        return variations_at(seq, t)

    bound = _power_of_two_at_least(cauchy_bound(p))
    lo, hi = -bound, bound
    stack = [(lo, hi, var_at(lo), var_at(hi))]
    found = []
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1 and (hi - lo).to_fraction() < tolerance:
            found.append((lo, hi))
            continue
        m = midpoint(lo, hi)
        vm = var_at(m)
        stack.append((m, hi, vm, vhi))
        stack.append((lo, m, vlo, vm))
    found.sort(key=lambda iv: iv[0])

    chain = [f]
    while chain[-1].degree > 0:
        chain.append(gcd(chain[-1], chain[-1].derivative()))
    chain = [h for h in chain if h.degree > 0]
    chain_seqs = [reduced_sylvester_sequence(h, UniPoly([1], h.var)) for h in chain]

    out = []
    for lo, hi in found:
        mult = sum(1 for s in chain_seqs if variations_at(s, lo) - variations_at(s, hi) > 0)
        out.append(IsolatingInterval(lo, hi, mult))
    return out


def hurwitz_matrix(f: UniPoly) -> List[List[Fraction]]:
    """``k x k`` matrix with 1-based entry ``(i, j) = c_{k - 2j + i}`` (zero outside ``0..k``)."""
    _require_nonzero(f)
    k = f.degree
    if k < 1:
        raise ConstantPolynomial("Hurwitz matrix needs degree >= 1")
    return [[f[k - 2 * j + i] if 0 <= k - 2 * j + i <= k else Fraction(0) for j in range(1, k + 1)] for i in range(1, k + 1)]


def hurwitz_determinants(f: UniPoly) -> List[Fraction]:
    """Leading principal minors ``Δ_1 .. Δ_k`` of the Hurwitz matrix."""
    H = hurwitz_matrix(f)
    return [det([row[:i] for row in H[:i]]) for i in range(1, len(H) + 1)]


def is_hurwitz_stable(f: UniPoly) -> bool:
    """True iff every complex root of ``f`` has negative real part.

    A negative leading coefficient is normalized away by negating ``f``.
    """
    _require_nonzero(f)
    if f.lead < 0:
        f = -f
    return all(d > 0 for d in hurwitz_determinants(f))
