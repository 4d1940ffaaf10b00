"""Finitely presented modules over FinitelyPresentedAlgebra, one weight at a time.

A module is given by generators e_1..e_g (each with a weight) and relations,
each relation being a list of g polynomials.  In weight w the module is the
quotient of the span of {m e_k : m a standard monomial, wt(m) + wt(e_k) = w}
by the span of all monomial multiples of relations that land in weight w.
Ungraded (zero-dimensional) algebras put everything in weight 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FinitelyPresentedAlgebra, NotZeroDimensional
from .linalg import Echelon, QuotientSpace
from .polynomials import Polynomial


class TruncationError(ValueError):
    pass


@dataclass
class ModulePiece:
    weight: object
    ambient: list  # (monomial index in the based algebra, generator index)
    index: dict
    quotient: QuotientSpace

    @property
    def dim(self) -> int:
        return self.quotient.dim

    def basis_ambient(self) -> list:
        """Ambient positions whose classes form a basis of the piece."""
        return [self.ambient[k] for k in self.quotient.free]


class PresentedModule:
    def __init__(
        self,
        algebra: FinitelyPresentedAlgebra,
        gen_weights,
        relations,
        gen_labels=None,
        bound: int | None = None,
        name: str = "",
    ):
        self.algebra = algebra
        self.ngens = len(gen_weights)
        self.graded = bool(algebra.weights)
        self.gen_weights = [int(w) if self.graded else 0 for w in gen_weights]
        self.gen_labels = list(gen_labels) if gen_labels is not None else [f"e{k + 1}" for k in range(self.ngens)]
        self.relations = [tuple(algebra.nf(c) for c in r) for r in relations]
        self.relations = [r for r in self.relations if any(c for c in r)]
        if bound is None and not algebra.is_zero_dimensional:
            raise TruncationError(f"{algebra.describe()} is infinite-dimensional; a weight bound is required")
        self.bound = bound
        self.name = name
        self._rel_weight = [self._homogeneous_weight(r) for r in self.relations]
        self._pieces: dict = {}

    def _homogeneous_weight(self, r):
        ws = set()
        for k, c in enumerate(r):
            for e in c.terms:
                ws.add(self.algebra.weight(e) + self.gen_weights[k])
        if len(ws) > 1:
            raise ValueError(f"relation is not homogeneous (weights {sorted(ws)})")
        return ws.pop()

    @property
    def based(self):
        return self.algebra.based(self.bound)

    def with_bound(self, bound: int) -> "PresentedModule":
        return PresentedModule(self.algebra, self.gen_weights, self.relations, self.gen_labels, bound, self.name)

    def weights(self) -> list:
        A = self.based
        ws = {a + g for a in A.by_weight for g in self.gen_weights}
        if self.bound is not None:
            ws = {w for w in ws if w <= self.bound}
        return sorted(ws)

    def _check_weight(self, w):
        if self.bound is not None and w > self.bound:
            raise TruncationError(f"weight {w} is beyond the truncation bound {self.bound}")

    def piece(self, w) -> ModulePiece:
        if w in self._pieces:
            return self._pieces[w]
        self._check_weight(w)
        A = self.based
        ambient = []
        for k, g in enumerate(self.gen_weights):
            for i in A.by_weight.get(w - g, []):
                ambient.append((i, k))
        index = {a: n for n, a in enumerate(ambient)}
        sub = Echelon()
        if ambient:
            for r, wr in zip(self.relations, self._rel_weight):
                for i in A.by_weight.get(w - wr, []):
                    m = A.monomials[i]
                    mono = Polynomial.monomial(m, self.algebra.field.one, self.algebra.field)
                    sub.add(self.vector([mono * c for c in r], w, index))
        piece = ModulePiece(w, ambient, index, QuotientSpace(len(ambient), sub_echelon=sub))
        self._pieces[w] = piece
        return piece

    def vector(self, element, w, index=None) -> dict:
        """Ambient coordinates of an element (list of g polynomials) in weight w."""
        if index is None:
            index = self.piece(w).index
        A = self.based
        out: dict = {}
        for k, c in enumerate(element):
            if not c:
                continue
            for i, v in self.algebra.to_vector(c, A).items():
                pos = index.get((i, k))
                if pos is None:
                    if A.weights[i] + self.gen_weights[k] != w:
                        raise ValueError("element is not homogeneous of the requested weight")
                    continue
                y = out.get(pos)
                out[pos] = v if y is None else y + v
                if not out[pos]:
                    del out[pos]
        return out

    def coords(self, element, w) -> dict:
        """Coordinates of the class of ``element`` in the basis of the weight-w piece."""
        p = self.piece(w)
        return p.quotient.coords(self.vector(element, w, p.index))

    def dim(self, w=None) -> int:
        if w is None:
            if self.bound is not None:
                raise TruncationError("total dimension of a truncated module; give a weight")
            return sum(self.piece(v).dim for v in self.weights())
        if self.bound is not None and w > self.bound:
            raise TruncationError(f"weight {w} is beyond the truncation bound {self.bound}")
        return self.piece(w).dim

    def dims(self) -> dict:
        return {w: self.piece(w).dim for w in self.weights()}

    def element_of(self, position) -> list:
        """The element m e_k for an ambient position (i, k)."""
        i, k = position
        A = self.based
        mono = Polynomial.monomial(A.monomials[i], self.algebra.field.one, self.algebra.field)
        zero = Polynomial(self.algebra.nvars, {}, self.algebra.field)
        return [mono if j == k else zero for j in range(self.ngens)]

    def lift(self, coords: dict, w) -> list:
        """A representing element (list of polynomials) of a class given by coordinates."""
        p = self.piece(w)
        amb = p.quotient.lift(coords)
        zero = Polynomial(self.algebra.nvars, {}, self.algebra.field)
        out = [zero] * self.ngens
        for pos, c in amb.items():
            i, k = p.ambient[pos]
            out[k] = out[k] + Polynomial.monomial(self.based.monomials[i], c, self.algebra.field)
        return out

    def element_str(self, element) -> str:
        parts = []
        for k, c in enumerate(element):
            if not c:
                continue
            lab = self.gen_labels[k]
            cs = c.to_str(self.algebra.names, self.algebra.order)
            if lab == "1":
                parts.append(cs)
            elif cs == "1":
                parts.append(lab)
            elif len(c.terms) == 1:
                parts.append(f"{cs}*{lab}")
            else:
                parts.append(f"({cs})*{lab}")
        return " + ".join(parts) or "0"

    def __repr__(self):
        b = f", weights <= {self.bound}" if self.bound is not None else ""
        return f"PresentedModule({self.name or self.algebra.describe()}, {self.ngens} generators{b})"


def induced_map(src: PresentedModule, tgt: PresentedModule, image, w, shift=0) -> list:
    """Columns (target-basis coordinates) of a map given on ambient positions.

    ``image(position)`` returns an element of ``tgt`` (list of polynomials)
    of weight w + shift.  The map must descend to the quotients.
    """
    ps = src.piece(w)
    pt = tgt.piece(w + shift)
    cols = []
    for pos in ps.quotient.free:
        el = image(ps.ambient[pos])
        cols.append(pt.quotient.coords(tgt.vector(el, w + shift, pt.index)))
    return cols


def multiplication_map(M: PresentedModule, s: Polynomial, w, ws) -> list:
    """Columns of multiplication by the homogeneous element s: M_w -> M_{w+ws}."""

    def image(pos):
        return [s * c for c in M.element_of(pos)]

    return induced_map(M, M, image, w, ws)


def free_module(algebra, rank: int = 1, bound=None, weights=None) -> PresentedModule:
    weights = weights or [0] * rank
    return PresentedModule(algebra, weights, [], ["1"] if rank == 1 else None, bound)


__all__ = [
    "PresentedModule",
    "ModulePiece",
    "TruncationError",
    "induced_map",
    "multiplication_map",
    "free_module",
    "NotZeroDimensional",
]
