"""Algebras given by a vector-space basis and structure constants.

This is the form every homological computation consumes.  Weights live in
a grading monoid: plain ints, or tuples of ints (multigradings); an
ungraded algebra puts everything in weight 0.  A weight-truncated algebra
drops products whose weight exceeds the bound, which is harmless for any
computation that stays inside a single weight no larger than the bound.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Callable

from .linalg import vaxpy


def wadd(a, b):
    if isinstance(a, tuple):
        return tuple(x + y for x, y in zip(a, b))
    return a + b


def wsub(a, b):
    if isinstance(a, tuple):
        return tuple(x - y for x, y in zip(a, b))
    return a - b


def wnonneg(a) -> bool:
    if isinstance(a, tuple):
        return all(x >= 0 for x in a)
    return a >= 0


def wzero(a):
    return tuple(0 for _ in a) if isinstance(a, tuple) else 0


class BasedAlgebra:
    """Commutative unital algebra with basis ``labels`` and a product rule.

    ``mul_rule(i, j)`` returns the product of basis elements i and j as a
    sparse vector; results are cached.  ``weights[i]`` is the weight of basis
    element i, and the rule must respect weights.
    """

    def __init__(
        self,
        field,
        labels: list,
        weights: list,
        unit: int,
        mul_rule: Callable,
        bound=None,
        name: str = "",
    ):
        self.field = field
        self.labels = list(labels)
        self.weights = list(weights)
        self.unit = unit
        self._rule = mul_rule
        self.bound = bound
        self.name = name
        self._table: dict = {}
        self.by_weight = defaultdict(list)
        for i, w in enumerate(self.weights):
            self.by_weight[w].append(i)
        self.by_weight = dict(self.by_weight)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def mul(self, i: int, j: int) -> dict:
        if i > j:
            i, j = j, i
        key = (i, j)
        r = self._table.get(key)
        if r is None:
            r = self._rule(i, j)
            self._table[key] = r
        return r

    def mul_vec(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                vaxpy(out, self.mul(i, j), a * b)
        return out

    def one(self) -> dict:
        return {self.unit: self.field.one}

    def mult_columns(self, v: dict, indices=None) -> list:
        """Columns of multiplication by v on the basis elements ``indices``."""
        idx = range(self.dim) if indices is None else indices
        return [self.mul_vec(v, {i: self.field.one}) for i in idx]

    def weight_of(self, v: dict):
        ws = {self.weights[i] for i in v}
        if len(ws) != 1:
            raise ValueError("element is not homogeneous")
        return ws.pop()

    def graded(self) -> bool:
        return len(self.by_weight) > 1

    def __repr__(self):
        return f"BasedAlgebra({self.name or '?'}, dim={self.dim}, field={self.field})"

    def check_associative_commutative(self) -> bool:
        n = self.dim
        F = self.field
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    left = self.mul_vec(self.mul(i, j), {k: F.one})
                    right = self.mul_vec({i: F.one}, self.mul(j, k))
                    if left != right:
                        return False
        return True


def polynomial_extension(A: BasedAlgebra, tmax: int, nt: int = 1) -> BasedAlgebra:
    """A[t_1..t_nt] truncated at t-degree <= tmax in each variable.

    Basis elements are pairs (a, s) with s the exponent vector of the t's;
    the weight is s (an int when nt == 1).  A's own grading is forgotten.
    """
    import itertools

    exps = list(itertools.product(range(tmax + 1), repeat=nt))
    labels = []
    weights = []
    index = {}
    for s in exps:
        for a in range(A.dim):
            index[(a, s)] = len(labels)
            labels.append((A.labels[a], s))
            weights.append(s[0] if nt == 1 else s)
    pairs = [(a, s) for s in exps for a in range(A.dim)]
    unit = index[(A.unit, (0,) * nt)]

    def rule(i, j):
        a, s = pairs[i]
        b, r = pairs[j]
        sr = tuple(x + y for x, y in zip(s, r))
        if max(sr) > tmax:
            return {}
        return {index[(c, sr)]: v for c, v in A.mul(a, b).items()}

    name = f"{A.name}[t]" if nt == 1 else f"{A.name}[t1..t{nt}]"
    return BasedAlgebra(A.field, labels, weights, unit, rule, bound=tmax, name=name)
