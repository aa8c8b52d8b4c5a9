from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from realroots.arith import NEG_INF, POS_INF
from realroots.errors import BothZero, DivisionByZeroPoly, ZeroPolynomial
from realroots.unipoly import UniPoly, eval_sign, ext_gcd, gcd, squarefree_part

x = UniPoly.gen("x")
F_RUN = x * (2 * x - 3) * (x**4 - 2) ** 2

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(small, max_size=7).map(lambda cs: UniPoly(cs, "x"))
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_representation_trims_and_degree():
    assert UniPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert UniPoly([]).degree == -1
    assert UniPoly([0, 0]).is_zero()
    assert UniPoly([5]).degree == 0


def test_running_example_expansion():
    # x(2x-3)(x^4-2)^2 = 2x^10 - 3x^9 - 8x^6 + 12x^5 + 8x^2 - 12x
    assert F_RUN == UniPoly([0, -12, 8, 0, 0, 12, -8, 0, 0, -3, 2])


def test_derivative_examples():
    assert (x**2 - 1).derivative() == 2 * x
    assert UniPoly([7]).derivative().is_zero()
    d = F_RUN.derivative()
    assert d.degree == 9
    assert d.lead == 20  # 10 * 2, the lead of the expansion is 2x^10
    assert d == UniPoly([-12, 16, 0, 0, 60, -48, 0, 0, -27, 20])


def test_divmod_examples():
    assert divmod(x**2 - 1, x - 1) == (x + 1, UniPoly([]))
    assert divmod(x**3, x**2 + 1) == (x, -x)
    assert divmod(UniPoly([5]), x) == (UniPoly([]), UniPoly([5]))
    with pytest.raises(DivisionByZeroPoly):
        divmod(x, UniPoly([]))


def test_gcd_examples():
    assert gcd(x**2 - 1, x - 1) == x - 1
    assert gcd(F_RUN, F_RUN.derivative()) == x**4 - 2
    assert gcd(x**2 + 1, x**2 + 1) == x**2 + 1
    with pytest.raises(BothZero):
        gcd(UniPoly([]), UniPoly([]))


def test_squarefree_part_examples():
    assert squarefree_part((x - 1) ** 2) == x - 1
    sf = squarefree_part(F_RUN)
    assert sf.degree == 6
    assert sf == (x * (2 * x - 3) * (x**4 - 2)).monic()
    assert squarefree_part(x**2 + 1) == x**2 + 1
    with pytest.raises(ZeroPolynomial):
        squarefree_part(UniPoly([]))


def test_eval_sign_examples():
    assert eval_sign(x**2 - 1, 0) == -1
    assert eval_sign(x**3, POS_INF) == 1
    assert eval_sign(x**3, NEG_INF) == -1
    assert eval_sign(2 * x**4 - 1, NEG_INF) == 1
    assert eval_sign(UniPoly([]), POS_INF) == 0


def test_printing():
    assert str(2 * x**3 - Fraction(1, 2) * x + 7) == "2*x^3 - 1/2*x + 7"
    assert str(-x) == "-x"
    assert str(UniPoly([])) == "0"
    assert str(UniPoly([Fraction(-3, 2)], "T")) == "-3/2"


@given(polys, nonzero_polys)
def test_divmod_identity(f, g):
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


@given(polys, polys)
def test_gcd_divides_both(f, g):
    if f.is_zero() and g.is_zero():
        return
    d = gcd(f, g)
    assert d.lead == 1
    assert (f % d).is_zero() and (g % d).is_zero()
    dd, s, t = ext_gcd(f, g)
    assert dd == d
    assert s * f + t * g == d


@given(nonzero_polys)
def test_squarefree_times_gcd_recovers_f(f):
    if f.is_constant():
        return
    prod = gcd(f, f.derivative()) * squarefree_part(f)
    assert prod * f.lead == f


@given(polys, polys, small, small)
def test_derivative_linear_and_product_rule(f, g, a, b):
    assert (a * f + b * g).derivative() == a * f.derivative() + b * g.derivative()
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


@given(polys, polys, small)
def test_evaluation_is_ring_homomorphism(f, g, t):
    assert (f * g)(t) == f(t) * g(t)
    assert (f + g)(t) == f(t) + g(t)
    assert f(g)(t) == f(g(t))
