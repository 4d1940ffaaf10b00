"""Sparse exact linear algebra over QQ or QQ(u).

Vectors are dicts ``{index: nonzero coefficient}``.  A linear map is given by
the list of images of the source basis vectors (its columns).  Everything is
built on :class:`Echelon`, an incrementally maintained reduced row echelon
form: pivot vectors have coefficient 1 at their pivot and 0 at every other
pivot, so reduction against it is a single pass and canonical.
"""

from __future__ import annotations

from typing import Iterable


def vadd(u: dict, v: dict, c=1) -> dict:
    """u + c*v as a new dict."""
    out = dict(u)
    for k, x in v.items():
        y = out.get(k)
        if y is None:
            out[k] = c * x
        else:
            y = y + c * x
            if y:
                out[k] = y
            else:
                del out[k]
    return out


def vaxpy(out: dict, v: dict, c) -> None:
    """In place: out += c*v."""
    for k, x in v.items():
        y = out.get(k)
        if y is None:
            out[k] = c * x
        else:
            y = y + c * x
            if y:
                out[k] = y
            else:
                del out[k]


def vscale(v: dict, c) -> dict:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


class Echelon:
    """Reduced echelon basis of a subspace, grown one vector at a time.

    If ``track`` is set, every stored vector remembers the combination of
    inserted vectors (by insertion label) that produced it.
    """

    def __init__(self, track: bool = False):
        self.rows: dict = {}  # pivot -> row (pivot coefficient 1)
        self.track = track
        self.combos: dict = {}  # pivot -> combination of labels

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict, combo: dict | None = None):
        """Canonical remainder of v modulo the span (and the tracked combo)."""
        out = dict(v)
        hits = [p for p in v if p in self.rows]
        for p in hits:
            c = v[p]
            vaxpy(out, self.rows[p], -c)
            if combo is not None:
                vaxpy(combo, self.combos[p], -c)
        return out

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def add(self, v: dict, label=None) -> bool:
        """Insert v; returns False if v already lies in the span."""
        combo = {label: 1} if self.track else None
        w = self.reduce(v, combo)
        if not w:
            if self.track:
                self._last_dependency = combo
            return False
        p = min(w)
        inv = 1 / w[p]
        if inv != 1:
            w = vscale(w, inv)
            if combo is not None:
                combo = vscale(combo, inv)
        for q, row in self.rows.items():
            c = row.get(p)
            if c is not None:
                vaxpy(row, w, -c)
                if self.track:
                    vaxpy(self.combos[q], combo, -c)
        self.rows[p] = w
        if self.track:
            self.combos[p] = combo
        return True

    def extend(self, vectors: Iterable[dict]) -> "Echelon":
        for v in vectors:
            self.add(v)
        return self

    def basis(self) -> list:
        return [self.rows[p] for p in sorted(self.rows)]

    def pivots(self) -> list:
        return sorted(self.rows)


def rank(vectors: Iterable[dict]) -> int:
    return Echelon().extend(vectors).rank


def kernel(columns: list) -> list:
    """Basis of the kernel of the map whose j-th column is ``columns[j]``.

    Kernel vectors are dicts over source indices.
    """
    ech = Echelon(track=True)
    out = []
    for j, col in enumerate(columns):
        if not ech.add(col, label=j):
            out.append(ech._last_dependency)
    return out


def image_and_kernel(columns: list):
    ech = Echelon(track=True)
    ker = []
    for j, col in enumerate(columns):
        if not ech.add(col, label=j):
            ker.append(ech._last_dependency)
    return ech, ker


def apply(columns: list, v: dict) -> dict:
    """Image of the source vector v under the map given by columns."""
    out: dict = {}
    for j, c in v.items():
        vaxpy(out, columns[j], c)
    return out


def compose(outer: list, inner: list) -> list:
    """Columns of outer o inner."""
    return [apply(outer, col) for col in inner]


def is_zero_map(columns: list) -> bool:
    return all(not c for c in columns)


class QuotientSpace:
    """V / U for V = span of ``dim`` coordinate vectors and U a subspace.

    Coordinates of a class are read off the canonical remainder at the
    non-pivot positions, so they do not depend on the representative.
    """

    def __init__(self, dim: int, sub: Iterable[dict] = (), sub_echelon: Echelon | None = None):
        self.ambient_dim = dim
        self.sub = sub_echelon if sub_echelon is not None else Echelon().extend(sub)
        piv = set(self.sub.rows)
        self.free = [k for k in range(dim) if k not in piv]
        self.index = {k: i for i, k in enumerate(self.free)}

    @property
    def dim(self) -> int:
        return len(self.free)

    def coords(self, v: dict) -> dict:
        r = self.sub.reduce(v)
        idx = self.index
        return {idx[k]: c for k, c in r.items()}

    def lift(self, coords: dict) -> dict:
        return {self.free[i]: c for i, c in coords.items()}

    def induced(self, columns_on_ambient: list, target: "QuotientSpace") -> list:
        """Columns, in quotient coordinates, of a map V -> W that descends."""
        return [target.coords(columns_on_ambient[k]) for k in self.free]


def subspace_dim_of_span(vectors: Iterable[dict]) -> int:
    return rank(vectors)


def solve_in_span(basis: list, v: dict):
    """Coefficients c with sum c_k basis[k] = v, or None if v is not in the span."""
    ech = Echelon(track=True)
    for k, b in enumerate(basis):
        ech.add(b, label=k)
    combo: dict = {}
    r = ech.reduce(v, combo)
    if r:
        return None
    return {k: -c for k, c in combo.items()}


class Subquotient:
    """Z / B for subspaces B of Z, with coordinates of classes on chosen representatives."""

    def __init__(self, cycles: Iterable[dict], boundaries: Iterable[dict]):
        self._ech = Echelon(track=True)
        for k, b in enumerate(boundaries):
            self._ech.add(b, label=("b", k))
        self.boundary_rank = self._ech.rank
        self.reps: list = []
        for z in cycles:
            if self._ech.add(z, label=("z", len(self.reps))):
                self.reps.append(z)

    @property
    def dim(self) -> int:
        return len(self.reps)

    def coords(self, v: dict) -> dict:
        combo: dict = {}
        if self._ech.reduce(v, combo):
            raise ValueError("vector does not lie in the cycle space")
        return {k: -c for (tag, k), c in combo.items() if tag == "z"}

    def induced(self, f_columns: list, target: "Subquotient") -> list:
        """Matrix of the map induced by f on classes (columns indexed by self.reps)."""
        return [target.coords(apply(f_columns, z)) for z in self.reps]
