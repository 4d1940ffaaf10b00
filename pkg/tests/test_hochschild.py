import pytest
import sympy

from nkcalc.differentials import kaehler
from nkcalc.eulerian import adams_operation, adams_operation_by_shuffles, eulerian_idempotent, group_algebra_mul
from nkcalc.hochschild import (
    HochschildComplex,
    NotNilpotent,
    _ungraded,
    as_based,
    cyclic_homology,
    hochschild_homology,
    hodge_decompose,
    hodge_decomposition,
    iterated_direct,
    iterated_prediction,
    iterated_recursion_holds,
    periodicity_vanishes,
    relative_hh,
    weighted_polynomial_extension,
)
from nkcalc.kunneth import kunneth_base_change
from nkcalc.linalg import compose, is_zero_map
from nkcalc.parsing import parse_ring

POINT = "ring Q[x] / (x)"


def hypersurface_hh(f: str, N: int) -> list:
    """HH of Q[x]/(f): deg f in degree 0, deg gcd(f, f') in every positive degree."""
    x = sympy.symbols("x")
    F = sympy.Poly(sympy.sympify(f), x)
    g = sympy.gcd(F, F.diff(x)).degree()
    return [F.degree()] + [g] * N


@pytest.mark.parametrize("f", ["x^2", "x^3", "x^2 - 1", "x^4 - x^2", "x^3 - x"])
def test_hh_of_hypersurfaces_matches_formula(f):
    A = parse_ring(f"ring Q[x] / ({f})")
    assert hochschild_homology(A, 4).dims() == hypersurface_hh(f.replace("^", "**"), 4)


def test_hh_of_point():
    assert hochschild_homology(parse_ring(POINT), 3).dims() == [1, 0, 0, 0]


def test_hh_square_of_maximal():
    A = parse_ring("ring Q[x,y] / (x^2, x*y, y^2)")
    assert hochschild_homology(A, 4).dims() == [3, 3, 5, 8, 12]


def test_boundary_identities():
    A = _ungraded(as_based(parse_ring("ring Q[x,y] / (x^2, x*y, y^2)")))
    C = HochschildComplex(A, 4)
    for m in range(1, 4):
        assert is_zero_map(compose(C.b(m, 0), C.b(m + 1, 0)))
        assert is_zero_map(compose(C.B(m + 1, 0), C.B(m, 0)))
        bB = compose(C.b(m + 1, 0), C.B(m, 0))
        Bb = compose(C.B(m - 1, 0), C.b(m, 0))
        assert all(not {k: u.get(k, 0) + v.get(k, 0) for k in set(u) | set(v) if u.get(k, 0) + v.get(k, 0)}
                   for u, v in zip(bB, Bb))


def test_unnormalized_dimension():
    A = _ungraded(as_based(parse_ring("ring Q[x] / (x^2)")))
    C = HochschildComplex(A, 3, normalized=False)
    assert [C.dim(m, 0) for m in range(4)] == [2 ** (m + 1) for m in range(4)]


def test_eulerian_idempotents_exact():
    for n in range(1, 6):
        es = [eulerian_idempotent(n, i) for i in range(1, n + 1)]
        total = {}
        for e in es:
            for p, c in e.items():
                total[p] = total.get(p, 0) + c
        assert {p: c for p, c in total.items() if c} == {tuple(range(n)): 1}
        for i, a in enumerate(es):
            for j, b in enumerate(es):
                assert group_algebra_mul(a, b) == (a if i == j else {})


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_adams_descent_formula_matches_shuffles(n):
    for k in range(1, 4):
        assert adams_operation(n, k) == adams_operation_by_shuffles(n, k)
        # psi^k = sum_i k^i e^(i)
        combo = {}
        for i in range(1, n + 1):
            for p, c in eulerian_idempotent(n, i).items():
                combo[p] = combo.get(p, 0) + k**i * c
        assert {p: c for p, c in combo.items() if c} == adams_operation(n, k)


def test_hodge_degree_one_is_everything(dual):
    H = hodge_decomposition(dual, 2)
    assert H.dim(1, 1) == H.total(1) == kaehler(dual, 1).dim()
    assert H.dim(2, 2) == 0 and H.dim(2, 1) == 1


def test_hodge_square_of_maximal():
    H = hodge_decomposition(parse_ring("ring Q[x,y] / (x^2, x*y, y^2)"), 4)
    assert (H.dim(2, 1), H.dim(2, 2)) == (4, 1)
    assert (H.dim(3, 1), H.dim(3, 2), H.dim(3, 3)) == (1, 7, 0)
    assert (H.dim(4, 2), H.dim(4, 3)) == (9, 3)
    for m in range(5):
        assert sum(H.dim(m, i) for i in range(m + 1)) == H.total(m)
        assert H.dim(m, m + 1) == 0 and H.dim(m, -1) == 0


def test_hodge_beyond_truncation_raises(dual):
    C = HochschildComplex(_ungraded(as_based(dual)), 2)
    with pytest.raises(ValueError):
        hodge_decompose(C, range(5))


def test_cyclic_point_and_dual_numbers(dual):
    assert cyclic_homology(parse_ring(POINT), 4).dims() == [1, 0, 1, 0, 1]
    R = cyclic_homology(dual, 4)
    assert R.sbi_exact
    assert R.dims() == [2, 0, 2, 0, 2]


def test_graded_and_ungraded_cyclic_agree():
    g = cyclic_homology(parse_ring("ring Q[x] / (x^3) weights x=1"), 4).dims()
    u = cyclic_homology(parse_ring("ring Q[x] / (x^3)"), 4).dims()
    assert g == u


def test_periodicity_vanishes_in_positive_weight(cusp):
    C = HochschildComplex(as_based(cusp, 8), 5)
    for w in range(1, 9):
        assert periodicity_vanishes(C, w, 4)
    assert not periodicity_vanishes(C, 0, 4)


def test_relative_hh(dual):
    assert relative_hh(dual, ["x"], 3).dims() == [1, 1, 1, 1]
    assert relative_hh(parse_ring("ring Q[x] / (x^3)"), ["x"], 2).dims() == [2, 2, 2]
    assert relative_hh(dual, [], 3).dims() == [0, 0, 0, 0]


def test_relative_hh_rejects_non_nilpotent():
    with pytest.raises(NotNilpotent):
        relative_hh(parse_ring("ring Q[x] / (x^2 - 1)"), ["x - 1"], 2)


@pytest.mark.parametrize("text", [POINT, "ring Q[x] / (x^2)"])
def test_polynomial_extension_bigrading(text):
    E = weighted_polynomial_extension(parse_ring(text), 2, 3)
    assert E.mismatches() == []


def test_polynomial_extension_of_point():
    E = weighted_polynomial_extension(parse_ring(POINT), 1, 3)
    for j in range(1, 4):
        assert sum(E.nhh[(1, i, j)] for i in range(2)) == 1
        assert sum(E.nhc[(0, i, j)] for i in range(1)) == 1
        assert sum(E.nhc[(1, i, j)] for i in range(2)) == 0


@pytest.mark.parametrize("p", [2, 3])
def test_iterated_extension(dual, p):
    H = hodge_decomposition(dual, 3)

    def h(n, i):
        return H.dim(n, i) if 0 <= i <= n else 0

    direct = iterated_direct(dual, 2, p)
    assert all(direct[k] == iterated_prediction(h, p, *k) for k in direct)
    assert iterated_recursion_holds(h, 3, 3)


def test_kunneth_point_and_dual_numbers(dual):
    k0 = kunneth_base_change(parse_ring(POINT), 1)
    assert k0.predicted == [1, 1] and k0.holds
    k = kunneth_base_change(dual, 3)
    assert k.predicted == [2, 3, 2, 2] and k.holds


def test_kunneth_twisted_form():
    k = kunneth_base_change(parse_ring("ring Q(u)[x] / ((x - u)^2)"), 3)
    assert k.predicted == [2, 3, 2, 2] and k.holds
