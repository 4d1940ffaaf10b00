"""Exact computations around NK-groups of Q-algebras.

Typical pieces TK_n^(i) are assembled from Hochschild homology (with its
Hodge decomposition) and Kähler/cdh differential forms, for Artinian
algebras over Q or Q(u) and for numerical-semigroup curves over Q.
"""

from .algebra import FinitelyPresentedAlgebra
from .cech import cech_exactness
from .complexes import ChainComplex, koszul_complex
from .differentials import (
    de_rham_exactness_suite,
    kaehler,
    omega_cdh,
    torsion_submodule,
)
from .eulerian import eulerian_idempotent
from .fields import QQ, QU
from .groebner import groebner_basis
from .hochschild import (
    cyclic_homology,
    hochschild_homology,
    hodge_decomposition,
    relative_hh,
    weighted_polynomial_extension,
)
from .kunneth import kunneth_base_change
from .nk import (
    NKTable,
    TypicalPiece,
    bass_report,
    fiber_cohomology,
    np_decomposition,
    tk_table,
    tk_table_artinian,
    tk_table_curve,
    two_path_check,
)
from .parsing import ParseError, parse_polynomial, parse_ring
from .polynomials import Polynomial
from .semigroup import NumericalSemigroup, semigroup_ring
from .witt import CartierModule, WittVector, check_relations, polynomial_line_model, typical_piece

__version__ = "0.1.0"

__all__ = [
    "FinitelyPresentedAlgebra", "cech_exactness", "ChainComplex", "koszul_complex",
    "de_rham_exactness_suite", "kaehler", "omega_cdh", "torsion_submodule",
    "eulerian_idempotent", "QQ", "QU", "groebner_basis", "cyclic_homology",
    "hochschild_homology", "hodge_decomposition", "relative_hh",
    "weighted_polynomial_extension", "kunneth_base_change", "NKTable", "TypicalPiece",
    "bass_report", "fiber_cohomology", "np_decomposition", "tk_table",
    "tk_table_artinian", "tk_table_curve", "two_path_check", "ParseError",
    "parse_polynomial", "parse_ring", "Polynomial", "NumericalSemigroup",
    "semigroup_ring", "CartierModule", "WittVector", "check_relations",
    "polynomial_line_model", "typical_piece",
]
