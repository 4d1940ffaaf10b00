import pytest

from nkcalc.corpus import ARTINIAN, builtin
from nkcalc.differentials import UnsupportedRing
from nkcalc.fields import QU
from nkcalc.hochschild import hochschild_homology
from nkcalc.nk import (
    HH_BRANCH,
    SEQUENCE_BRANCH,
    VANISHING_BRANCH,
    MissingEntries,
    NKTable,
    bass_report,
    biconditional_on_table,
    fiber_cohomology,
    kunneth_tk_check,
    np_decomposition,
    tk_table,
    tk_table_artinian,
    tk_table_curve,
    two_path_check,
)
from nkcalc.parsing import parse_ring
from nkcalc.semigroup import NumericalSemigroup, SemigroupError


def nonzero(table):
    return {k: e.dim for k, e in table.entries.items() if e.dim}


def test_dual_numbers_table(dual):
    T = tk_table_artinian(dual, (-1, 4))
    assert nonzero(T) == {(1, 1): 1, (2, 2): 1, (3, 2): 1, (4, 3): 1}
    assert T.get(1, 1).branch == SEQUENCE_BRANCH
    assert T.get(3, 2).branch == HH_BRANCH
    assert T.get(2, 4).branch == VANISHING_BRANCH
    assert all(i >= 1 for (_, i) in T.entries)


def test_etale_table_vanishes():
    T = tk_table_artinian(parse_ring("ring Q[x] / (x^2 - 1)"), (-1, 3))
    assert nonzero(T) == {}


def test_artinian_rejects_curve(cusp):
    with pytest.raises(UnsupportedRing):
        tk_table_artinian(cusp, (0, 1))


def test_dual_numbers_over_rational_functions(dual):
    T = tk_table_artinian(dual.base_change(QU), (0, 3))
    assert T.dim(2, 2) == 2


def test_kunneth_for_tk():
    for text in ARTINIAN.values():
        A = parse_ring(text)
        out = kunneth_tk_check(A, (0, 3))
        assert all(a == b for a, b in out.values()), out


@pytest.mark.parametrize("gens,gaps", [((2, 3), 1), ((3, 4, 5), 2), ((2, 5), 2), ((1,), 0)])
def test_curve_tables(gens, gaps):
    T = tk_table_curve(gens, (-3, 2), 12)
    for n in (-3, -2, -1):
        assert T.total(n) == 0
    assert T.dim(0, 1) == gaps == len(NumericalSemigroup(gens).gaps)
    assert T.dim(1, 1) == 0


def test_curve_tk22_is_torsion():
    from nkcalc.differentials import kaehler, torsion_submodule
    from nkcalc.semigroup import semigroup_ring

    T = tk_table_curve((3, 4, 5), (2, 2), 16)
    tors = torsion_submodule(kaehler(semigroup_ring((3, 4, 5)), 1, 16), bound=16)
    assert T.dim(2, 2) == tors.total == 5
    assert T.get(2, 2).certified_to == 16


def test_smooth_line_all_zero():
    assert nonzero(tk_table_curve((1,), (-1, 3), 10)) == {}


def test_semigroup_gcd_rejected():
    with pytest.raises(SemigroupError):
        tk_table_curve((2, 4), (0, 1))


def test_dispatch(cusp, dual):
    assert tk_table(cusp, (0, 0)).kind == "curve"
    assert tk_table(dual, (0, 0)).kind == "artinian"


def test_np_all_zero():
    r = np_decomposition({3: [0] * 7, 2: [0] * 7, 1: [0] * 7}, 3, 3, 6)
    assert r.zero


def test_np_persistence():
    nk = {5: [0] + [2] * 6, 4: [0] * 7}
    r = np_decomposition(nk, 2, 5, 6)
    assert r.series == [0, 0, 2, 4, 6, 8, 10]


def test_np_shape_of_counterexample():
    # NK_7 = 0 and NK_6 one-dimensional in each weight: N^2K_7 has dim j - 1 in weight j
    r = np_decomposition({7: [0] * 9, 6: [0] + [1] * 8}, 2, 7, 8)
    assert r.series == [max(j - 1, 0) for j in range(9)]


def test_np_missing_entries(dual):
    T = tk_table_artinian(dual, (2, 3))
    with pytest.raises(MissingEntries):
        np_decomposition(T, 3, 3)


def test_np_propagates_certification(cusp):
    T = tk_table_curve(cusp, (0, 1), 10)
    assert np_decomposition(T, 2, 1, 4).certified_to == 10


def test_bass_reports(dual, cusp):
    line = tk_table_curve((1,), (-1, 2), 10)
    v = bass_report(line, 0)
    assert v.nk_n_zero and v.nk_prev_zero and v.n2k_zero and v.k_regular and v.biconditional_holds
    c = bass_report(tk_table(cusp, (-1, 2)), 1)
    assert not c.nk_prev_zero and not c.n2k_zero and not c.k_regular and c.biconditional_holds
    c0 = bass_report(tk_table(cusp, (-1, 2)), 0)
    assert not c0.nk_n_zero and not c0.n2k_zero
    d = bass_report(tk_table(dual, (-1, 2)), 1)
    assert not d.nk_n_zero and d.nk_prev_zero and not d.n2k_zero and not d.k_regular
    assert "consistent" in d.prose()


def test_biconditional_every_corpus_table():
    for text in ARTINIAN.values():
        assert all(biconditional_on_table(tk_table(parse_ring(text), (-1, 4))).values())
    for gens in [(2, 3), (3, 4, 5), (2, 5), (1,)]:
        assert all(biconditional_on_table(tk_table(gens, (-1, 3), 12)).values())


def test_two_path_artinian():
    for text in ARTINIAN.values():
        out = two_path_check(parse_ring(text), 4)
        assert all(a == b for a, b in out.values()), (text, out)


def test_large_n_regime():
    # A_red is etale for every corpus ring, so HH_{n-1}(A) = HH_{n-1}(A, nil A) for n >= 2
    for text in ARTINIAN.values():
        A = parse_ring(text)
        T = tk_table_artinian(A, (2, 4))
        hh = hochschild_homology(A, 3).dims()
        assert [T.total(n) for n in range(2, 5)] == hh[1:4]


def test_fiber_cohomology(cusp, dual):
    Fc = fiber_cohomology(tk_table(cusp, (-1, 2)))
    assert Fc.dims[1] == 1
    Fd = fiber_cohomology(tk_table(dual, (-1, 4)), dual)
    assert Fd.dims[-1] == 1
    assert all(a == b for a, b in Fd.checks.values())
    Fe = fiber_cohomology(tk_table(builtin("etale2"), (-1, 3)))
    assert all(v == 0 for v in Fe.dims.values())


def test_table_json_roundtrip(cusp):
    T = tk_table(cusp, (-1, 3))
    assert NKTable.from_dict(T.to_dict()).to_dict() == T.to_dict()


def test_missing_range(dual):
    T = tk_table(dual, (0, 2))
    with pytest.raises(MissingEntries):
        T.total(5)
