import pytest

from nkcalc.cech import NotModuleFinite, cech_exactness, cross_extension, cusp_extension, line_extension
from nkcalc.parsing import parse_ring


def test_identity_extension():
    rep = cech_exactness(*line_extension(), 6)
    assert rep.exact and rep.seminormal_within_bound


def test_cross_is_exact():
    rep = cech_exactness(*cross_extension(), 6)
    assert rep.exact
    assert [d.dim_equalizer for d in rep.degrees] == [1] + [2] * 6


def test_cusp_negative_control():
    rep = cech_exactness(*cusp_extension(), 6)
    # t (x) 1 != 1 (x) t, so the equalizer is exactly A; the failure of seminormality
    # shows up as the Traverso witness t instead
    assert all(d.dim_equalizer == d.dim_A for d in rep.degrees)
    assert rep.degrees[1].dim_B == 1 and rep.degrees[1].dim_equalizer == 0
    assert rep.traverso_witnesses == [(1, "t")]


def test_cusp_tensor_square_in_degree_one():
    # Q[u,v]/(u^2 - v^2, u^3 - v^3) has both u and v in degree 1
    rep = cech_exactness(*cusp_extension(), 3)
    assert rep.degrees[1].dim_BB == 2


def test_not_module_finite():
    A = parse_ring("ring Q[x] weights x=1")
    B = parse_ring("ring Q[x,y] weights x=1 y=1")
    with pytest.raises(NotModuleFinite):
        cech_exactness(A, B, ["x"], 3)


def test_rejects_non_map():
    A = parse_ring("ring Q[x] / (x^2) weights x=1")
    B = parse_ring("ring Q[t] weights t=1")
    with pytest.raises(ValueError):
        cech_exactness(A, B, ["t"], 3)
