"""Finitely presented commutative algebras F[x_1..x_n]/I."""

from __future__ import annotations

from functools import cached_property
from typing import Sequence

from . import upoly
from .based import BasedAlgebra
from .fields import QQ
from .groebner import groebner_basis, normal_form
from .linalg import Echelon, image_and_kernel, solve_in_span
from .polynomials import MonomialOrder, Polynomial, mono_divides, mono_weight


class NotZeroDimensional(ValueError):
    pass


class FinitelyPresentedAlgebra:
    """Quotient of a polynomial ring by an ideal, with a cached Groebner basis.

    ``weights`` (one nonnegative int per variable) makes the algebra graded;
    the default monomial order is then weighted degrevlex, otherwise
    degrevlex.  ``reduced`` is an optional hint for rings known to be reduced
    by construction (semigroup rings); it is never needed for zero-dimensional
    algebras, where reducedness is decided.
    """

    def __init__(
        self,
        names: Sequence[str],
        generators: Sequence[Polynomial] = (),
        weights: Sequence[int] | None = None,
        order: MonomialOrder | None = None,
        field=QQ,
        reduced: bool | None = None,
        label: str = "",
    ):
        self.names = list(names)
        self.nvars = len(self.names)
        self.field = field
        gens = []
        for g in generators:
            if g.nvars != self.nvars:
                raise ValueError("generator has the wrong number of variables")
            gens.append(g)
        self.generators = gens
        if weights is not None:
            weights = tuple(int(w) for w in weights)
            if len(weights) != self.nvars or any(w < 0 for w in weights):
                raise ValueError("weights must be nonnegative, one per variable")
        self.weights = weights
        if order is None:
            order = MonomialOrder("wdegrevlex", weights) if weights else MonomialOrder("degrevlex")
        self.order = order
        self._reduced_hint = reduced
        self.label = label

    # ----- basic ring operations -----
    def var(self, k) -> Polynomial:
        if isinstance(k, str):
            k = self.names.index(k)
        return Polynomial.variable(self.nvars, k, self.field)

    def vars(self) -> list:
        return [self.var(k) for k in range(self.nvars)]

    def const(self, c) -> Polynomial:
        return Polynomial.constant(self.nvars, c, self.field)

    @cached_property
    def gb(self) -> list:
        return groebner_basis(self.generators, self.order)

    @cached_property
    def leading_monomials(self) -> list:
        return [g.leading(self.order)[0] for g in self.gb]

    def nf(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self.gb, self.order)

    def contains(self, p: Polynomial) -> bool:
        return not self.nf(p)

    def is_standard(self, e: tuple) -> bool:
        return not any(mono_divides(lm, e) for lm in self.leading_monomials)

    @property
    def graded(self) -> bool:
        return self.weights is not None

    def weight(self, e: tuple) -> int:
        return mono_weight(e, self.weights) if self.weights else 0

    def is_homogeneous(self) -> bool:
        if not self.weights:
            return False
        return all(g.is_homogeneous(self.weights) for g in self.gb)

    def is_trivial(self) -> bool:
        return any(sum(lm) == 0 for lm in self.leading_monomials)

    # ----- dimension theory -----
    @cached_property
    def is_zero_dimensional(self) -> bool:
        if self.is_trivial():
            return True
        for k in range(self.nvars):
            if not any(lm[k] > 0 and sum(lm) == lm[k] for lm in self.leading_monomials):
                return False
        return True

    def standard_monomials(self, bound: int | None = None, limit: int = 200000) -> list:
        """Standard monomials (a basis of the quotient), sorted by weight then order.

        Without a bound the algebra must be zero-dimensional; with a bound the
        algebra must be graded and only monomials of weight <= bound are kept.
        """
        if self.is_trivial():
            return []
        if bound is None and not self.is_zero_dimensional:
            raise NotZeroDimensional(
                f"{self.describe()} is not zero-dimensional; supply a weight bound"
            )
        if bound is not None and not self.graded:
            raise ValueError("a weight bound needs a graded algebra")
        if bound is not None:
            for k in range(self.nvars):
                if self.weights[k] == 0 and not any(
                    lm[k] > 0 and sum(lm) == lm[k] for lm in self.leading_monomials
                ):
                    raise NotZeroDimensional(
                        f"weight-0 variable {self.names[k]} generates an infinite-dimensional piece"
                    )
        start = (0,) * self.nvars
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for e in frontier:
                for k in range(self.nvars):
                    f = list(e)
                    f[k] += 1
                    f = tuple(f)
                    if f in seen:
                        continue
                    if bound is not None and self.weight(f) > bound:
                        continue
                    if not self.is_standard(f):
                        continue
                    seen.add(f)
                    nxt.append(f)
            if len(seen) > limit:
                raise NotZeroDimensional("standard monomial enumeration exceeded its limit")
            frontier = nxt
        return sorted(seen, key=lambda e: (self.weight(e), self.order.key(e)))

    def dimension(self) -> int:
        return len(self.standard_monomials())

    def monomial_str(self, e: tuple) -> str:
        s = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k)
        return s or "1"

    def based(self, bound: int | None = None) -> BasedAlgebra:
        """Basis + structure constants (truncated at ``bound`` when given)."""
        key = ("based", bound)
        cache = self.__dict__.setdefault("_based_cache", {})
        if key in cache:
            return cache[key]
        mons = self.standard_monomials(bound)
        index = {e: i for i, e in enumerate(mons)}
        weights = [self.weight(e) for e in mons]
        zero = (0,) * self.nvars
        if zero not in index:
            raise ValueError("the zero ring has no unit basis element")
        nvars, field, gb, order = self.nvars, self.field, self.gb, self.order

        def rule(i, j):
            e = tuple(a + b for a, b in zip(mons[i], mons[j]))
            if bound is not None and self.weight(e) > bound:
                return {}
            r = normal_form(Polynomial._raw(nvars, {e: field.one}, field), gb, order)
            return {index[m]: c for m, c in r.terms.items() if m in index}

        A = BasedAlgebra(
            field,
            [self.monomial_str(e) for e in mons],
            weights,
            index[zero],
            rule,
            bound=bound,
            name=self.describe(),
        )
        A.monomials = mons
        A.source = self
        cache[key] = A
        return A

    def to_vector(self, p: Polynomial, A: BasedAlgebra) -> dict:
        """Coordinates of p (reduced) in the basis of ``A = self.based(...)``."""
        r = self.nf(p)
        index = {e: i for i, e in enumerate(A.monomials)}
        out = {}
        for e, c in r.terms.items():
            if e in index:
                out[index[e]] = c
            elif A.bound is None or self.weight(e) <= A.bound:
                raise ValueError("normal form left the standard monomial basis")
        return out

    def from_vector(self, v: dict, A: BasedAlgebra) -> Polynomial:
        return Polynomial(self.nvars, {A.monomials[i]: c for i, c in v.items()}, self.field)

    def multiplication_matrix(self, p: Polynomial) -> list:
        """Columns of multiplication by p on the standard monomial basis."""
        A = self.based()
        pv = self.to_vector(p, A)
        return A.mult_columns(pv)

    # ----- constructions -----
    def quotient(self, extra: Sequence[Polynomial], label: str = "") -> "FinitelyPresentedAlgebra":
        return FinitelyPresentedAlgebra(
            self.names,
            list(self.generators) + [p for p in extra if p],
            self.weights,
            self.order,
            self.field,
            label=label,
        )

    def base_change(self, field, label: str = "") -> "FinitelyPresentedAlgebra":
        """The same presentation with coefficients read in ``field``."""
        if self.field is not QQ:
            raise ValueError("only algebras over QQ can be base-changed")
        gens = [Polynomial(self.nvars, {e: field(c) for e, c in g.terms.items()}, field) for g in self.generators]
        return FinitelyPresentedAlgebra(self.names, gens, self.weights, self.order, field, self._reduced_hint, label)

    def with_weights(self, weights) -> "FinitelyPresentedAlgebra":
        return FinitelyPresentedAlgebra(self.names, self.generators, weights, None, self.field, self._reduced_hint, self.label)

    def minimal_polynomial(self, p: Polynomial) -> tuple:
        """Monic minimal polynomial (upoly, coefficients low first) of p acting on A."""
        if self.field is not QQ:
            raise NotImplementedError("minimal polynomials are computed over QQ only")
        if not self.is_zero_dimensional:
            raise NotZeroDimensional(f"{self.describe()} is not zero-dimensional")
        A = self.based()
        one = A.one()
        pv = self.to_vector(p, A)
        powers = [one]
        while True:
            nxt = A.mul_vec(powers[-1], pv)
            coeffs = solve_in_span(powers, nxt)
            if coeffs is not None:
                d = len(powers)
                poly = [-coeffs.get(k, 0) for k in range(d)] + [1]
                return upoly.trim(poly)
            powers.append(nxt)

    def nilradical(self) -> "Nilradical":
        if self.field is QQ:
            return nilradical_zero_dim(self)
        return nilradical_trace_form(self)

    def is_reduced(self) -> bool:
        if self._reduced_hint is not None:
            return self._reduced_hint
        if self.is_zero_dimensional:
            return not self.nilradical().generators
        # in(I) radical => I radical
        if all(max(lm) <= 1 for lm in self.leading_monomials):
            return True
        raise ValueError(
            f"cannot certify that {self.describe()} is reduced (not zero-dimensional, "
            "initial ideal not squarefree)"
        )

    def describe(self) -> str:
        if self.label:
            return self.label
        gens = ", ".join(g.to_str(self.names, self.order) for g in self.generators) or "0"
        f = "Q" if self.field is QQ else f"Q({self.field.var})"
        s = f"{f}[{','.join(self.names)}]/({gens})"
        if self.weights:
            s += " weights " + " ".join(f"{n}={w}" for n, w in zip(self.names, self.weights))
        return s

    def __repr__(self):
        return f"FinitelyPresentedAlgebra({self.describe()})"


class Nilradical:
    """Generators of nil(A) and the reduced quotient A/nil(A)."""

    def __init__(self, algebra, generators, reduced):
        self.algebra = algebra
        self.generators = generators
        self.reduced = reduced

    def dimension(self) -> int:
        return self.algebra.dimension() - self.reduced.dimension()

    def subspace(self):
        """Basis (as vectors in algebra.based()) of the nilradical as a subspace."""
        A = self.algebra.based()
        ech = Echelon()
        for g in self.generators:
            gv = self.algebra.to_vector(g, A)
            for i in range(A.dim):
                ech.add(A.mul_vec(gv, {i: A.field.one}))
        return ech

    def nilpotency_index(self) -> int:
        """Least N with nil(A)^N = 0."""
        A = self.algebra.based()
        J = self.subspace().basis()
        power = J
        N = 1
        while power:
            N += 1
            ech = Echelon()
            for u in power:
                for v in J:
                    ech.add(A.mul_vec(u, v))
            power = ech.basis()
            if N > A.dim + 1:
                raise RuntimeError("nilradical is not nilpotent")
        return N


def nilradical_zero_dim(algebra: FinitelyPresentedAlgebra) -> Nilradical:
    """nil(A) for zero-dimensional A over QQ, via squarefree parts of eliminants.

    In characteristic zero the radical of a zero-dimensional ideal I is
    I + (sqfree(p_1)(x_1), ..., sqfree(p_n)(x_n)), p_k the minimal polynomial
    of x_k in A.
    """
    if not algebra.is_zero_dimensional:
        raise NotZeroDimensional(f"{algebra.describe()} is not zero-dimensional")
    gens = []
    for k in range(algebra.nvars):
        p = algebra.minimal_polynomial(algebra.var(k))
        q = upoly.squarefree_part(p)
        if len(q) != len(p):
            x = algebra.var(k)
            g = algebra.const(0)
            for d, c in enumerate(q):
                if c:
                    g = g + (x ** d) * c
            g = algebra.nf(g)
            if g:
                gens.append(g)
    reduced = algebra.quotient(gens, label=f"({algebra.describe()})_red" if gens else algebra.label)
    if not gens:
        reduced = algebra
    return Nilradical(algebra, gens, reduced)


def nilradical_trace_form(algebra: FinitelyPresentedAlgebra) -> Nilradical:
    """nil(A) as the radical of the trace form (a, b) -> Tr(ab), any field of characteristic 0.

    A_red is a product of separable field extensions, on which the trace form
    is nondegenerate, while nilpotent elements have trace zero against
    everything.
    """
    if not algebra.is_zero_dimensional:
        raise NotZeroDimensional(f"{algebra.describe()} is not zero-dimensional")
    A = algebra.based()
    n = A.dim
    F = A.field

    def trace(v):
        t = F.zero
        for i, c in v.items():
            for j in range(n):
                t = t + c * A.mul(i, j).get(j, F.zero)
        return t

    traces = [trace({k: F.one}) for k in range(n)]
    # Gram matrix columns: column a has entries Tr(e_a e_b)
    cols = []
    for a in range(n):
        col = {}
        for b in range(n):
            t = F.zero
            for c, v in A.mul(a, b).items():
                t = t + v * traces[c]
            if t:
                col[b] = t
        cols.append(col)
    _, ker = image_and_kernel(cols)
    gens = [algebra.nf(algebra.from_vector(v, A)) for v in ker]
    gens = [g for g in gens if g]
    if not gens:
        return Nilradical(algebra, [], algebra)
    reduced = algebra.quotient(gens, label=f"({algebra.describe()})_red")
    return Nilradical(algebra, gens, reduced)
