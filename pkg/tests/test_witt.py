import pytest
from gmpy2 import mpq

from nkcalc.hochschild import hodge_decomposition
from nkcalc.parsing import parse_ring
from nkcalc.witt import (
    AlgebraAction,
    WeightOverflow,
    WittVector,
    act,
    check_relations,
    hh_tensor_model,
    nhc_model,
    polynomial_line_model,
    tensor_model,
    typical_piece,
)


@pytest.fixture
def line():
    return polynomial_line_model(12)


def t(j, c=1):
    return {j: {0: mpq(c)}}


def test_all_relations_on_line(line):
    rep = check_relations(line, m_max=4)
    assert rep.ok, rep.failures[:3]
    assert not rep.skipped


def test_frobenius_examples(line):
    assert act(("F", 2), line, act(("V", 2), line, t(1))) == t(1, 2)
    assert act(("F", 3), line, t(6)) == t(2, 3)
    assert act(("F", 2), line, t(3)) == {}


def test_homothety_and_verschiebung(line):
    lhs = act(("[r]", 2), line, act(("V", 2), line, t(1)))
    rhs = act(("V", 2), line, act(("[r]", 4), line, t(1)))
    assert lhs == rhs == t(2, 4)
    assert act(("[r]", 3), line, t(3)) == t(3, 27)


def test_coprime_commutation_on_weight_six(line):
    x = t(2)
    assert line.F(2, line.V(3, x)) == line.V(3, line.F(2, x)) == t(3, 2)


def test_verschiebung_overflow_is_reported(line):
    with pytest.raises(WeightOverflow):
        line.V(5, t(3))


def test_homothety_by_algebra_element():
    # M = Q[x]/(x^2) acting on itself; [x](m t^3) = x^3 m t^3 = 0, [1 + x] = (1 + 3x) on weight 3
    X = [{1: mpq(1)}, {}]
    mod = tensor_model(AlgebraAction(["x"], [X], 2), 6)
    assert mod.homothety("x", mod.basis_element(3, 0)) == {}
    assert mod.homothety("1 + x", mod.basis_element(3, 0)) == {3: {0: mpq(1), 1: mpq(3)}}
    assert check_relations(mod, 3, elements=["1 + x", "x", 2]).ok


def test_witt_vector_ghost_action():
    X = [{1: mpq(1)}, {}]
    mod = tensor_model(AlgebraAction(["x"], [X], 2), 4)
    w = WittVector.constant("x", 4)
    e = mod.basis_element(2, 0)
    assert mod.witt(w, e) == mod.act("x", e)
    s = WittVector([2, 3, 4, 5]) * WittVector([1, 1, 2, 2])
    assert s.ghost == [2, 3, 8, 10]


def test_typical_piece_recovers_module():
    X = [{1: mpq(1)}, {}]
    mod = tensor_model(AlgebraAction(["x"], [X], 2), 8)
    tp = typical_piece(mod, ["x", "1 + x", 3])
    # the typical piece is M (x) t, and every weight of the module has its dimension
    assert tp.per_weight == {j: (2 if j == 1 else 0) for j in range(1, 9)}
    assert tp.tensor_shape_holds


def test_typical_piece_weight_one_is_everything():
    mod = polynomial_line_model(5)
    assert typical_piece(mod, [2, 3]).per_weight[1] == 1


@pytest.mark.parametrize("text,n,i", [("ring Q[x] / (x^2)", 1, 1), ("ring Q[x] / (x^2)", 2, 1),
                                      ("ring Q[x,y] / (x^2, x*y, y^2)", 2, 2)])
def test_hh_model_typical_piece_is_hodge_piece(text, n, i):
    A = parse_ring(text)
    H = hodge_decomposition(A, n + 1)
    mod = hh_tensor_model(A, n, i, 6)
    tp = typical_piece(mod, [2, 3] + A.names)
    assert tp.per_weight[1] == H.dim(n, i)


@pytest.mark.parametrize("n,i", [(0, 0), (1, 1), (2, 1)])
def test_nhc_model_typical_piece(dual, n, i):
    H = hodge_decomposition(dual, 3)
    mod = nhc_model(dual, n, i, 4)
    tp = typical_piece(mod, [2, 3])
    assert all(d == H.dim(n, i) for d in tp.module_dims.values())
    assert tp.per_weight[1] == H.dim(n, i)
    rep = check_relations(mod, 2)
    assert rep.ok and rep.skipped
