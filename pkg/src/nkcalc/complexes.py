"""Finite chain complexes of based vector spaces and their homology."""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import Echelon, QuotientSpace, compose, image_and_kernel, rank


class ComplexError(ValueError):
    pass


@dataclass
class Homology:
    index: int
    dim: int
    cycles: list  # representatives, linearly independent modulo boundaries
    boundaries: Echelon = field(repr=False)

    def quotient(self, ambient_dim: int) -> QuotientSpace:
        return QuotientSpace(ambient_dim, sub_echelon=self.boundaries)


class ChainComplex:
    """Spaces C_m for m in [lo, hi] with boundary maps d_m leaving C_m.

    ``direction`` is -1 for homological complexes (d_m: C_m -> C_{m-1}) and
    +1 for cohomological ones.  ``d[m]`` is the list of images of the basis
    vectors of C_m.  Missing maps are zero; composites are checked on
    construction.
    """

    def __init__(self, dims: dict, d: dict, direction: int = -1, field=None, check: bool = True):
        if direction not in (-1, 1):
            raise ComplexError("direction must be -1 or +1")
        self.dims = dict(dims)
        self.d = {m: cols for m, cols in d.items()}
        self.direction = direction
        self.field = field
        self.lo = min(self.dims) if self.dims else 0
        self.hi = max(self.dims) if self.dims else -1
        for m, cols in self.d.items():
            if len(cols) != self.dims.get(m, 0):
                raise ComplexError(f"d_{m} has {len(cols)} columns but dim C_{m} = {self.dims.get(m, 0)}")
        if check:
            self.check()

    def dim(self, m: int) -> int:
        return self.dims.get(m, 0)

    def boundary(self, m: int) -> list:
        cols = self.d.get(m)
        if cols is None:
            return [{} for _ in range(self.dim(m))]
        return cols

    def check(self) -> None:
        for m in self.dims:
            inner = self.boundary(m)
            outer = self.boundary(m + self.direction)
            if not inner or not any(inner) or not self.dim(m + self.direction):
                continue
            for k, v in enumerate(compose(outer, inner)):
                if v:
                    raise ComplexError(f"d o d != 0 on basis vector {k} of C_{m}")

    def rank_out(self, m: int) -> int:
        return rank(self.boundary(m))

    def homology_dim(self, m: int) -> int:
        if m not in self.dims:
            raise ComplexError(f"index {m} outside [{self.lo}, {self.hi}]")
        return self.dim(m) - self.rank_out(m) - self.rank_out(m - self.direction)

    def homology(self, m: int) -> Homology:
        if m not in self.dims:
            raise ComplexError(f"index {m} outside [{self.lo}, {self.hi}]")
        _, ker = image_and_kernel(self.boundary(m))
        bnd = Echelon().extend(self.boundary(m - self.direction))
        reps = []
        work = Echelon()
        work.rows = {p: dict(r) for p, r in bnd.rows.items()}
        for z in ker:
            if work.add(z):
                reps.append(z)
        return Homology(m, len(reps), reps, bnd)

    def homology_dims(self) -> dict:
        return {m: self.homology_dim(m) for m in sorted(self.dims)}


def koszul_complex(algebra, elements, bound: int):
    """Koszul complex of ``elements`` over a graded polynomial algebra, per weight <= bound.

    Returns {weight: ChainComplex}.  Homological degree p has basis
    (monomial, p-subset); used as a regular-sequence oracle.
    """
    from itertools import combinations

    n = len(elements)
    A = algebra.based(bound)
    el_vecs = [algebra.to_vector(e, A) for e in elements]
    el_wts = [A.weight_of(v) for v in el_vecs]
    out = {}
    for w in range(bound + 1):
        bases = {}
        for p in range(n + 1):
            b = []
            for S in combinations(range(n), p):
                ws = w - sum(el_wts[s] for s in S)
                for i in A.by_weight.get(ws, []):
                    b.append((i, S))
            bases[p] = b
        index = {p: {x: k for k, x in enumerate(b)} for p, b in bases.items()}
        d = {}
        for p in range(1, n + 1):
            cols = []
            for i, S in bases[p]:
                col = {}
                for pos, s in enumerate(S):
                    T = S[:pos] + S[pos + 1:]
                    sign = -1 if pos % 2 else 1
                    prod = A.mul_vec({i: A.field.one}, el_vecs[s])
                    for j, c in prod.items():
                        k = index[p - 1].get((j, T))
                        if k is None:
                            continue
                        col[k] = col.get(k, 0) + sign * c
                cols.append({k: c for k, c in col.items() if c})
            d[p] = cols
        dims = {p: len(b) for p, b in bases.items()}
        out[w] = ChainComplex(dims, d, direction=-1, field=A.field)
    return out
