"""Exact real-root counting and isolation for univariate polynomials and
zero-dimensional polynomial systems over the rationals."""

from .arith import NEG_INF, POS_INF, Dyadic, midpoint, sign
from .errors import *  # noqa: F401,F403
from .groebner import GroebnerBasis, QuotientRing, buchberger, normal_form, standard_basis
from .multipoly import GREVLEX, GRLEX, LEX, MonomialOrder, MultiPoly
from .parser import parse_multipoly, parse_poly, parse_unipoly
from .unipoly import UniPoly, eval_sign, gcd, squarefree_part
from .univariate import (
    IsolatingInterval,
    budan_fourier_bound,
    descartes_bound,
    hurwitz_determinants,
    hurwitz_matrix,
    is_hurwitz_stable,
    multiplicity_count,
    real_root_isolation,
    reduced_sylvester_sequence,
    sturm_count,
    sylvester_count,
    sylvester_sequence,
    variations,
    variations_at,
)
from .zerodim import (
    RurTriple,
    char_poly,
    min_poly,
    rank,
    rational_univariate_representation,
    real_count,
    regular_representation,
    signature,
    trace_count,
    trace_form,
    trace_signature,
    univariate_eliminant,
)

__version__ = "0.1.0"
