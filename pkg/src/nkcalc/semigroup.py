"""Numerical semigroups and their monomial curve rings Q[t^a_1, ..., t^a_k]."""

from __future__ import annotations

from functools import cached_property
from math import gcd
from typing import Sequence

from .algebra import FinitelyPresentedAlgebra
from .fields import QQ
from .groebner import groebner_basis
from .polynomials import MonomialOrder, Polynomial


class SemigroupError(ValueError):
    pass


class NumericalSemigroup:
    """The submonoid of (N, +) generated by positive integers with gcd 1."""

    def __init__(self, generators: Sequence[int]):
        gens = sorted(set(int(a) for a in generators))
        if not gens or gens[0] <= 0:
            raise SemigroupError("generators must be positive integers")
        g = 0
        for a in gens:
            g = gcd(g, a)
        if g != 1:
            raise SemigroupError(
                f"generators {gens} have gcd {g}; the normalization would not be Q[t]"
            )
        # drop redundant generators
        minimal = []
        for a in gens:
            if not self._member(a, minimal):
                minimal.append(a)
        self.generators = tuple(minimal)

    @staticmethod
    def _member(n: int, gens) -> bool:
        reach = [False] * (n + 1)
        reach[0] = True
        for k in range(1, n + 1):
            reach[k] = any(k >= a and reach[k - a] for a in gens)
        return reach[n]

    @cached_property
    def _elements_upto_conductor(self):
        m = self.generators[0]
        reach = [True]
        run = 1 if m == 1 else 0
        k = 0
        while run < m:
            k += 1
            ok = any(k >= a and reach[k - a] for a in self.generators)
            reach.append(ok)
            run = run + 1 if ok else 0
        return reach

    @cached_property
    def gaps(self) -> tuple:
        return tuple(k for k, ok in enumerate(self._elements_upto_conductor) if not ok)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def frobenius_number(self) -> int:
        return self.gaps[-1] if self.gaps else -1

    @property
    def conductor(self) -> int:
        return self.frobenius_number + 1

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        return n >= self.conductor or n not in self.gaps

    def elements(self, bound: int) -> list:
        return [k for k in range(bound + 1) if k in self]

    def __repr__(self):
        return f"NumericalSemigroup({', '.join(map(str, self.generators))})"

    def label(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"


def _names(k: int) -> list:
    if k <= 3:
        return ["x", "y", "z"][:k]
    return [f"x{i}" for i in range(1, k + 1)]


def toric_ideal(generators: Sequence[int]) -> list:
    """Generators of ker(Q[x_1..x_k] -> Q[t], x_i -> t^a_i), by eliminating t."""
    k = len(generators)
    n = k + 1  # variable 0 is t
    order = MonomialOrder("wdegrevlex", (1,) + tuple(generators), block=1)
    gens = []
    for i, a in enumerate(generators):
        e = [0] * n
        e[i + 1] = 1
        te = [0] * n
        te[0] = a
        gens.append(Polynomial(n, {tuple(e): QQ.one, tuple(te): -QQ.one}, QQ))
    G = groebner_basis(gens, order)
    out = []
    for g in G:
        if all(e[0] == 0 for e in g.terms):
            out.append(Polynomial(k, {e[1:]: c for e, c in g.terms.items()}, QQ))
    return out


def semigroup_ring(semigroup: NumericalSemigroup | Sequence[int]) -> FinitelyPresentedAlgebra:
    """Q[S] presented as Q[x_1..x_k]/(toric ideal), graded by wt(x_i) = a_i."""
    S = semigroup if isinstance(semigroup, NumericalSemigroup) else NumericalSemigroup(semigroup)
    gens = S.generators
    names = _names(len(gens))
    rels = toric_ideal(gens)
    A = FinitelyPresentedAlgebra(names, rels, gens, field=QQ, reduced=True, label=f"Q[S], S = {S.label()}")
    A.semigroup = S
    return A


def recognize_semigroup_ring(algebra: FinitelyPresentedAlgebra) -> NumericalSemigroup | None:
    """Return S when ``algebra`` is exactly Q[x]/(toric ideal of its weights), else None.

    The test compares reduced Groebner bases in the algebra's own order, so
    it is exact rather than truncated.
    """
    S = getattr(algebra, "semigroup", None)
    if S is not None:
        return S
    w = algebra.weights
    if algebra.field is not QQ or not w or any(a <= 0 for a in w):
        return None
    try:
        S = NumericalSemigroup(w)
    except SemigroupError:
        return None
    if tuple(sorted(w)) != S.generators:
        return None
    rels = toric_ideal(list(w))
    G = groebner_basis(rels, algebra.order) if rels else []
    if [g.monic(algebra.order) for g in G] != [g.monic(algebra.order) for g in algebra.gb]:
        return None
    return S
