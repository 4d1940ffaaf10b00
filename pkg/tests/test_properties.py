"""Randomised invariants."""

from math import comb

import sympy
from gmpy2 import mpq
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from nkcalc.algebra import FinitelyPresentedAlgebra
from nkcalc.differentials import de_rham_checks, kaehler
from nkcalc.eulerian import eulerian_idempotent, group_algebra_mul
from nkcalc.groebner import groebner_basis
from nkcalc.hochschild import hochschild_homology, hodge_decomposition
from nkcalc.linalg import Echelon, image_and_kernel, rank
from nkcalc.nk import np_decomposition
from nkcalc.parsing import parse_ring
from nkcalc.polynomials import MonomialOrder, Polynomial
from nkcalc.semigroup import NumericalSemigroup
from nkcalc.witt import check_relations, polynomial_line_model

SETTINGS = settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])

coeff = st.integers(-3, 3)
mono2 = st.tuples(st.integers(0, 3), st.integers(0, 3))


@st.composite
def poly2(draw):
    terms = draw(st.dictionaries(mono2, coeff.filter(bool), min_size=1, max_size=4))
    return Polynomial(2, {e: mpq(c) for e, c in terms.items()})


def to_sympy(p, x, y):
    return sum(sympy.Rational(int(c.numerator), int(c.denominator)) * x**e[0] * y**e[1]
               for e, c in p.terms.items())


@SETTINGS
@given(st.lists(poly2(), min_size=1, max_size=3))
def test_groebner_agrees_with_sympy(gens):
    order = MonomialOrder("degrevlex")
    gb = groebner_basis(gens, order)
    x, y = sympy.symbols("x y")
    ref = sympy.groebner([to_sympy(g, x, y) for g in gens], x, y, order="grevlex", domain="QQ")
    assert len(gb) == len(ref.exprs)
    for g in gb:
        assert ref.contains(to_sympy(g, x, y))
    for g in ref.exprs:
        # each reference element reduces to zero modulo ours
        A = FinitelyPresentedAlgebra(["x", "y"], gens)
        p = Polynomial(2, {m: mpq(int(c.p), int(c.q)) for m, c in sympy.Poly(g, x, y, domain="QQ").terms()})
        assert not A.nf(p)


@SETTINGS
@given(st.lists(poly2(), min_size=1, max_size=3), poly2())
def test_normal_form_idempotent(gens, p):
    A = FinitelyPresentedAlgebra(["x", "y"], gens)
    q = A.nf(p)
    assert A.nf(q) == q
    for g in gens:
        assert not A.nf(g)


@SETTINGS
@given(st.lists(st.lists(st.integers(-2, 2), min_size=4, max_size=4), min_size=1, max_size=6))
def test_rank_nullity(rows):
    cols = [{k: mpq(v) for k, v in enumerate(r) if v} for r in rows]
    _, ker = image_and_kernel(cols)
    assert rank(cols) + len(ker) == len(cols)


@SETTINGS
@given(st.integers(1, 5), st.data())
def test_eulerian_orthogonal(n, data):
    i = data.draw(st.integers(1, n))
    j = data.draw(st.integers(1, n))
    ei, ej = eulerian_idempotent(n, i), eulerian_idempotent(n, j)
    assert group_algebra_mul(ei, ej) == (ei if i == j else {})


@SETTINGS
@given(st.integers(2, 4), st.integers(1, 3))
def test_hodge_sums_for_truncated_polynomial_rings(k, N):
    A = parse_ring(f"ring Q[x] / (x^{k})")
    H = hodge_decomposition(A, N)
    for m in range(N + 1):
        assert sum(H.dim(m, i) for i in range(m + 1)) == H.total(m)
        assert H.dim(m, m) == kaehler(A, m).dim()


@SETTINGS
@given(st.lists(st.integers(2, 7), min_size=2, max_size=3).filter(lambda g: sympy.igcd(*g) == 1))
def test_semigroup_gaps(gens):
    S = NumericalSemigroup(gens)
    reach = {0}
    for v in range(1, 60):
        if any(v - a in reach for a in gens):
            reach.add(v)
    assert list(S.gaps) == [v for v in range(1, 60) if v not in reach]
    assert all(v in S for v in range(S.frobenius_number + 1, S.frobenius_number + 20))


@SETTINGS
@given(st.integers(1, 3), st.integers(0, 4))
def test_de_rham_d_squared_on_truncated_plane(a, b):
    A = parse_ring(f"ring Q[x,y] / (x^{a + 1}, y^{b + 1}) weights x=1 y=1")
    assert de_rham_checks(A, 2) == {"d_squared_zero": True, "leibniz": True}


@SETTINGS
@given(st.integers(1, 4), st.integers(0, 6), st.lists(st.integers(0, 3), min_size=4, max_size=4))
def test_np_series_matches_closed_form(p, n, nk_dims):
    # NK_q has constant dimension c_q in every positive weight; the weight-j dimension of
    # N^pK_n is sum_j' C(p-1, j') c_{n-j'} C(j - 1, p - 1)
    W = 8
    src = {n - j: [0] + [nk_dims[j]] * W for j in range(4)}
    r = np_decomposition(src, p, n, W)
    for w in range(W + 1):
        expect = sum(comb(p - 1, j) * nk_dims[j] for j in range(p)) * (comb(w - 1, p - 1) if w >= 1 else 0)
        assert r.series[w] == expect


@SETTINGS
@given(st.integers(4, 14))
def test_cartier_relations_any_truncation(N):
    assert check_relations(polynomial_line_model(N), 3).ok


@SETTINGS
@given(st.integers(2, 5))
def test_hh_of_truncated_polynomial(k):
    # HH_n of Q[x]/(x^k) has dimension k - 1 in every positive degree
    assert hochschild_homology(parse_ring(f"ring Q[x] / (x^{k})"), 3).dims() == [k] + [k - 1] * 3
