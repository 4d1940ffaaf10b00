import sympy
from gmpy2 import mpq

from nkcalc.algebra import NotZeroDimensional
from nkcalc.complexes import ChainComplex, ComplexError, koszul_complex
from nkcalc.fields import QQ, QU, RationalFunction
from nkcalc.groebner import groebner_basis, is_groebner, normal_form
from nkcalc.parsing import ParseError, parse_polynomial, parse_ring
from nkcalc.polynomials import MonomialOrder, Polynomial
import pytest

LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("degrevlex")


def P(text, names=("x", "y")):
    return parse_polynomial(text, list(names))


def test_groebner_principal():
    assert groebner_basis([P("x", ["x"])], GREVLEX) == [P("x", ["x"])]


def test_groebner_single_generator_is_reduced():
    f = P("y^2 - x^3")
    gb = groebner_basis([f], GREVLEX)
    assert len(gb) == 1 and (gb[0] == f or gb[0] == -f)


def test_groebner_lex_example():
    gb = groebner_basis([P("x*y - 1"), P("y^2 - 1")], LEX)
    assert sorted(g.to_str(["x", "y"]) for g in gb) == sorted(["x - y", "y^2 - 1"])


def test_groebner_matches_sympy():
    gens = [P("x^2*y - x + 1"), P("x*y^2 - y")]
    ours = groebner_basis(gens, LEX)
    x, y = sympy.symbols("x y")
    theirs = sympy.groebner([x**2 * y - x + 1, x * y**2 - y], x, y, order="lex")
    assert len(ours) == len(theirs.exprs)
    for g in ours:
        assert theirs.contains(sympy.sympify(g.to_str(["x", "y"])))
    assert is_groebner(ours, LEX)


def test_inconsistent_variable_counts_rejected():
    with pytest.raises(ValueError):
        groebner_basis([Polynomial.variable(1, 0), Polynomial.variable(2, 0)], GREVLEX)


def test_standard_monomials_dual_numbers(dual):
    assert dual.standard_monomials() == [(0,), (1,)]
    assert dual.dimension() == 2


def test_standard_monomials_cusp_one_per_weight(cusp):
    mons = cusp.standard_monomials(7)
    weights = sorted(cusp.weight(e) for e in mons)
    assert weights == [0, 2, 3, 4, 5, 6, 7]


def test_standard_monomials_square_of_maximal():
    A = parse_ring("ring Q[x,y] / (x^2, x*y, y^2)")
    assert sorted(A.standard_monomials()) == [(0, 0), (0, 1), (1, 0)]


def test_non_zero_dimensional_without_bound(cusp):
    with pytest.raises(NotZeroDimensional):
        cusp.standard_monomials()


def test_dimension_equals_multiplication_algebra_rank():
    A = parse_ring("ring Q[x,y] / (x^2 - y, y^3)")
    B = A.based()
    from nkcalc.linalg import rank

    # the regular representation is faithful: the multiplication matrices of the basis are independent
    flat = []
    for i in range(B.dim):
        cols = B.mult_columns({i: QQ.one})
        flat.append({(r, c): v for c, col in enumerate(cols) for r, v in col.items()})
    assert rank(flat) == A.dimension() == 6


def test_nilradical_examples():
    n = parse_ring("ring Q[x] / (x^2)").nilradical()
    assert n.dimension() == 1 and n.reduced.dimension() == 1
    e = parse_ring("ring Q[x] / (x^2 - 1)").nilradical()
    assert e.generators == [] or all(not g for g in e.generators)
    assert e.reduced.dimension() == 2
    m = parse_ring("ring Q[x,y] / (x^2, y^3)").nilradical()
    assert m.reduced.dimension() == 1
    assert m.nilpotency_index() <= 6


def test_nilradical_over_rational_functions():
    A = parse_ring("ring Q(u)[x] / ((x - u)^2)")
    nil = A.nilradical()
    assert nil.reduced.dimension() == 1


def test_rational_function_arithmetic():
    u = QU.gen
    f = (u + 1) / (u * u - 1)
    assert f == 1 / (u - 1)
    assert (u**2).derivative() == 2 * u
    assert bool(QU.zero) is False
    assert isinstance(f, RationalFunction)
    assert QQ(3) / 4 == mpq(3, 4)


def test_homology_small_complexes():
    zero = ChainComplex({0: 1, 1: 1}, {1: [{}]})
    assert zero.homology_dims() == {0: 1, 1: 1}
    ident = ChainComplex({0: 1, 1: 1}, {1: [{0: QQ.one}]})
    assert ident.homology_dims() == {0: 0, 1: 0}


def test_chain_complex_rejects_nonzero_composite():
    with pytest.raises(ComplexError):
        ChainComplex({0: 1, 1: 1, 2: 1}, {1: [{0: QQ.one}], 2: [{0: QQ.one}]})


def test_koszul_regular_sequence():
    A = parse_ring("ring Q[x,y] weights x=1 y=1")
    K = koszul_complex(A, [A.var(0), A.var(1)], 3)
    for w, C in K.items():
        assert C.homology_dim(1) == 0
        assert C.homology_dim(2) == 0


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as exc:
        parse_ring("ring Q[x] / (x^2 + )")
    assert exc.value.pos > 10


def test_parse_rejects_unknown_weight():
    with pytest.raises(ParseError):
        parse_ring("ring Q[x] / (x^2) weights y=1")


def test_normal_form_of_generators_is_zero(cusp):
    for g in cusp.generators:
        assert not cusp.nf(g)
    assert normal_form(cusp.generators[0], cusp.gb, cusp.order).is_zero()
