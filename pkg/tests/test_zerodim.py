import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from planted import planted_system
from realroots.arith import sign
from realroots.errors import SearchExhausted
from realroots.groebner import QuotientRing
from realroots.linalg import (
    char_poly,
    det,
    identity,
    mat_add,
    matmul,
    min_poly,
    poly_of_matrix,
    rank as elim_rank,
    transpose,
    zeros,
)
from realroots.multipoly import MultiPoly
from realroots.unipoly import UniPoly, gcd, squarefree_part
from realroots.univariate import sturm_count
from realroots.zerodim import (
    compose_numerator,
    rank,
    rational_univariate_representation,
    real_count,
    regular_representation,
    signature,
    trace_count,
    trace_form,
    univariate_eliminant,
)

F = Fraction
seeds = st.integers(0, 2**32 - 1)
T = UniPoly.gen("T")


def ring1(*gens_text):
    v = ("x",)
    x = MultiPoly.variable("x", v)
    return QuotientRing.from_generators([eval(g, {"x": x}) for g in gens_text]), x


def random_matrix(rng, d, lo=-4, hi=4):
    return [[F(rng.randint(lo, hi), rng.choice([1, 1, 2, 3])) for _ in range(d)] for _ in range(d)]


def charpoly_oracle_values(A, ts):
    """``det(t I - A)`` by Gaussian elimination, at each sample ``t``."""
    d = len(A)
    return [det([[F(int(i == j)) * t - A[i][j] for j in range(d)] for i in range(d)]) for t in ts]


# -- regular representation -----------------------------------------------------

def test_regular_representation_examples():
    R, x = ring1("x**2 - 2")
    assert regular_representation(x, R) == [[0, 2], [1, 0]]
    assert regular_representation(MultiPoly.constant(1, R.vars), R) == identity(2)


def test_regular_representation_columns_are_normal_forms():
    ps = planted_system(random.Random(7), n=2, max_points=6)
    R = QuotientRing.from_generators(ps.gens)
    f = MultiPoly({(2, 1): 3, (0, 2): F(-1, 2), (1, 0): 1, (0, 0): 4}, R.vars)
    M = regular_representation(f, R)
    for j in range(R.dimension):
        col = R.coordinates(f * R.basis_element(j))
        assert [M[i][j] for i in range(R.dimension)] == col


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_regular_representation_is_ring_morphism(seed):
    rng = random.Random(seed)
    ps = planted_system(rng, n=rng.randint(1, 3), max_points=5)
    R = QuotientRing.from_generators(ps.gens)

    def rand_poly():
        return MultiPoly({tuple(rng.randint(0, 2) for _ in R.vars): rng.randint(-3, 3) for _ in range(3)}, R.vars)

    f, g = rand_poly(), rand_poly()
    Mf, Mg = regular_representation(f, R), regular_representation(g, R)
    assert regular_representation(f * g, R) == matmul(Mf, Mg)
    assert regular_representation(f + g, R) == mat_add(Mf, Mg)
    assert all(c == 0 for row in poly_of_matrix(min_poly(Mf), Mf) for c in row)


# -- characteristic / minimal polynomials ---------------------------------------

def test_char_and_min_poly_examples():
    assert char_poly(identity(2)) == (T - 1) ** 2
    assert char_poly([[F(0), F(2)], [F(1), F(0)]]) == T**2 - 2
    assert min_poly(identity(2)) == T - 1
    assert min_poly([[F(0), F(2)], [F(1), F(0)]]) == T**2 - 2
    assert min_poly(zeros(3)) == T
    assert char_poly([]) == 1


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 9))
def test_char_poly_against_determinants(seed, d):
    A = random_matrix(random.Random(seed), d)
    p = char_poly(A)
    assert p.degree == d and p.lead == 1
    ts = list(range(-d, 2))
    assert [p(t) for t in ts] == charpoly_oracle_values(A, ts)
    # Cayley-Hamilton, and the minimal polynomial divides the characteristic one
    assert all(c == 0 for row in poly_of_matrix(p, A) for c in row)
    m = min_poly(A)
    assert (p % m).is_zero()
    assert all(c == 0 for row in poly_of_matrix(m, A) for c in row)


def test_min_poly_of_planted_spectrum():
    # P diag(1, 1, 2, 2, 2, -3) P^-1 has minimal polynomial (T-1)(T-2)(T+3)
    rng = random.Random(3)
    D = [F(v) for v in (1, 1, 2, 2, 2, -3)]
    while True:
        P = random_matrix(rng, 6)
        if det(P) != 0:
            break
    from realroots.linalg import solve

    Pinv_cols = [solve(P, [F(int(i == j)) for i in range(6)]) for j in range(6)]
    Pinv = transpose(Pinv_cols)
    A = matmul(matmul(P, [[D[i] if i == j else F(0) for j in range(6)] for i in range(6)]), Pinv)
    assert min_poly(A) == (T - 1) * (T - 2) * (T + 3)
    assert char_poly(A) == (T - 1) ** 2 * (T - 2) ** 3 * (T + 3)


# -- eliminants -------------------------------------------------------------------

def test_eliminant_examples():
    vs = ("x", "y")
    X, Y = (MultiPoly.variable(v, vs) for v in vs)
    R = QuotientRing.from_generators([X - Y, Y**2 - F(1, 2)])
    Z = UniPoly.gen("Z")
    assert univariate_eliminant(X, R) == Z**2 - F(1, 2)
    assert univariate_eliminant(MultiPoly.constant(F(7, 3), vs), R) == Z - F(7, 3)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_stickelberger_and_eliminant_kernel(seed):
    rng = random.Random(seed)
    ps = planted_system(rng, n=rng.randint(1, 3), allow_complex=False)
    R = QuotientRing.from_generators(ps.gens)
    f = MultiPoly.linear_form([rng.randint(-3, 3) for _ in R.vars], R.vars) + MultiPoly(
        {tuple(rng.randint(0, 2) for _ in R.vars): rng.randint(-2, 2)}, R.vars
    )
    M = regular_representation(f, R)
    chi = char_poly(M, "T")
    expected = UniPoly([1], "T")
    for p, m in ps.real_points:
        expected = expected * (T - f(p)) ** m
    assert chi == expected
    g = univariate_eliminant(f, R, "T")
    assert (chi % g).is_zero()
    # g(f) == 0 in R
    gf = g.coeffs and sum((f**k * c for k, c in enumerate(g.coeffs)), MultiPoly({}, R.vars))
    assert R.normal_form(gf).is_zero()
    # no proper divisor annihilates: the distinct values of f all appear
    distinct = {f(p) for p, _ in ps.real_points}
    assert squarefree_part(g) == UniPoly.from_roots(distinct, "T")


# -- trace forms, rank, signature -------------------------------------------------

def test_trace_form_examples():
    R, x = ring1("x**2 - 2")
    one = MultiPoly.constant(1, R.vars)
    assert trace_form(one, R) == [[2, 0], [0, 4]]
    assert trace_form(MultiPoly({}, R.vars), R) == zeros(2)
    assert rank([[F(2), F(0)], [F(0), F(4)]]) == 2
    assert rank(zeros(3)) == 0
    assert signature([[F(0), F(1)], [F(1), F(0)]]) == 0
    assert signature([[F(2), F(0)], [F(0), F(4)]]) == 2


def test_counts_univariate_examples():
    R, _ = ring1("x**2 - 2")
    assert trace_count(R) == 2 and real_count(R) == 2
    R, _ = ring1("x**2")
    assert trace_count(R) == 1 and real_count(R) == 1
    R, _ = ring1("x**2 + 1")
    assert trace_count(R) == 2 and real_count(R) == 0


def test_trace_form_entries_are_traces_of_products():
    ps = planted_system(random.Random(11), n=2, max_points=5)
    R = QuotientRing.from_generators(ps.gens)
    h = MultiPoly({(1, 1): 2, (0, 0): -1}, R.vars)
    S = trace_form(h, R)
    for i in range(R.dimension):
        for j in range(R.dimension):
            M = regular_representation(R.basis_element(i) * R.basis_element(j) * h, R)
            assert S[i][j] == sum(M[k][k] for k in range(R.dimension))


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_trace_counts_against_planted_points(seed):
    rng = random.Random(seed)
    ps = planted_system(rng, n=rng.randint(1, 3))
    R = QuotientRing.from_generators(ps.gens)
    assert R.dimension == ps.degree
    assert trace_count(R) == ps.n_points
    assert real_count(R) == len(ps.real_points)
    h = MultiPoly({tuple(rng.randint(0, 2) for _ in R.vars): rng.randint(-3, 3) for _ in range(3)}, R.vars)
    h = h + rng.randint(-2, 2)
    S = trace_form(h, R)
    assert signature(S) == sum(sign(h(p)) for p, _ in ps.real_points)
    if ps.n_complex_only == 0:
        assert rank(S) == sum(1 for p, _ in ps.real_points if h(p) != 0)


def congruent_diagonal(rng, d):
    D = [F(rng.choice([-3, -1, 0, 0, 1, 2, 5]), rng.choice([1, 2])) for _ in range(d)]
    while True:
        Q = random_matrix(rng, d, -3, 3)
        if det(Q) != 0:
            break
    Dm = [[D[i] if i == j else F(0) for j in range(d)] for i in range(d)]
    return matmul(matmul(transpose(Q), Dm), Q), D


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(1, 8))
def test_rank_signature_of_congruent_diagonals(seed, d):
    S, D = congruent_diagonal(random.Random(seed), d)
    assert signature(S) == sum(1 for v in D if v > 0) - sum(1 for v in D if v < 0)
    assert rank(S) == sum(1 for v in D if v != 0)
    p = char_poly(S)
    trailing = next(i for i, c in enumerate(p.coeffs) if c)
    assert rank(S) == d - trailing == elim_rank(S)


# -- rational univariate representation -----------------------------------------

def test_rur_shape_example():
    vs = ("x", "y")
    X, Y = (MultiPoly.variable(v, vs) for v in vs)
    R = QuotientRing.from_generators([X**2 - 2, Y - X])
    rur = rational_univariate_representation(R)
    assert rur.sep_form == X
    assert rur.char_poly == T**2 - 2
    # x = T and y = T modulo T^2 - 2
    for num in rur.numerators:
        assert ((num - T * rur.denominator) % rur.squarefree_char_poly).is_zero()
    for g in [X**2 - 2, Y - X]:
        assert compose_numerator(g, rur).is_zero()


def test_rur_univariate_example():
    R, x = ring1("x**2 - 2")
    rur = rational_univariate_representation(R)
    assert rur.sep_form == x
    assert rur.char_poly == T**2 - 2
    ((var, num, den),) = rur.coord_maps
    assert var == "x" and ((num - T * den) % (T**2 - 2)).is_zero()


def test_rur_needs_a_shift():
    vs = ("x", "y")
    X, Y = (MultiPoly.variable(v, vs) for v in vs)
    # points (0, 0), (0, 1), (1, 0): x alone does not separate them
    R = QuotientRing.from_generators([X**2 - X, Y**2 - Y, X * Y])
    rur = rational_univariate_representation(R)
    assert rur.sep_form != X
    assert squarefree_part(rur.char_poly).degree == 3
    with pytest.raises(SearchExhausted):
        rational_univariate_representation(R, bound=0)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_rur_parametrizes_planted_points(seed):
    rng = random.Random(seed)
    ps = planted_system(rng, n=rng.randint(1, 3))
    R = QuotientRing.from_generators(ps.gens)
    rur = rational_univariate_representation(R)
    chibar = rur.squarefree_char_poly
    assert chibar.degree == ps.n_points
    assert (rur.char_poly % chibar).is_zero() and rur.char_poly.degree == R.dimension
    for g in ps.gens:
        assert compose_numerator(g, rur).is_zero()
    for p, m in ps.real_points:
        t = rur.sep_form(p)
        assert chibar(t) == 0
        assert rur.point_at(t) == p
    assert sturm_count(chibar) == len(ps.real_points)
    assert gcd(chibar, chibar.derivative()).degree == 0
