"""Eulerian idempotents in Q[S_n] and the Adams operations they diagonalise.

A permutation is a tuple ``p`` with ``p[v]`` the slot that tensor factor v
moves to.  It acts on a_1 (x) ... (x) a_n with the sign of the permutation,
which is the action under which the shuffle operations commute with the
Hochschild boundary of a commutative algebra.

The k-th Adams operation is the sum of all k-fold shuffles; the coefficient
of p in it is binom(k - 1 - des(p) + n, n), a polynomial of degree n in k.
Reading off the coefficient of k^i gives e_n^(i), so that
psi^k = sum_i k^i e_n^(i).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from math import comb, factorial

from gmpy2 import mpq


def descents(p: tuple) -> int:
    return sum(1 for v in range(len(p) - 1) if p[v] > p[v + 1])


def sign(p: tuple) -> int:
    s = 1
    seen = [False] * len(p)
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            v = p[v]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def compose(p: tuple, q: tuple) -> tuple:
    """p after q."""
    return tuple(p[q[v]] for v in range(len(q)))


@lru_cache(maxsize=None)
def descent_polynomials(n: int) -> dict:
    """d -> coefficients [c_0..c_n] of binom(x - 1 - d + n, n) in x."""
    out = {}
    for d in range(max(n, 1)):
        coeffs = [mpq(1)]
        for r in range(n):
            # multiply by (x - d + r)
            a = -d + r
            new = [mpq(0)] * (len(coeffs) + 1)
            for k, c in enumerate(coeffs):
                new[k] += a * c
                new[k + 1] += c
            coeffs = new
        f = mpq(factorial(n))
        out[d] = [c / f for c in coeffs]
    return out


@lru_cache(maxsize=None)
def eulerian_idempotent(n: int, i: int) -> dict:
    """e_n^(i) as {permutation: coefficient}; e_0^(0) = identity."""
    if n == 0:
        return {(): mpq(1)} if i == 0 else {}
    if i < 1 or i > n:
        return {}
    polys = descent_polynomials(n)
    out = {}
    for p in permutations(range(n)):
        c = polys[descents(p)][i]
        if c:
            out[p] = c
    return out


@lru_cache(maxsize=None)
def adams_operation(n: int, k: int) -> dict:
    """psi^k in Q[S_n] from the descent formula."""
    out = {}
    for p in permutations(range(n)):
        c = comb(k - 1 - descents(p) + n, n) if k - 1 - descents(p) + n >= 0 else 0
        if c:
            out[p] = mpq(c)
    return out


def adams_operation_by_shuffles(n: int, k: int) -> dict:
    """psi^k by enumerating k-fold shuffles directly (independent oracle)."""
    out: dict = {}
    for g in product(range(k), repeat=n):  # g[s] = block receiving slot s
        sizes = [g.count(j) for j in range(k)]
        starts = [sum(sizes[:j]) for j in range(k)]
        p = [0] * n
        fill = list(starts)
        for s in range(n):
            j = g[s]
            p[fill[j]] = s
            fill[j] += 1
        p = tuple(p)
        out[p] = out.get(p, 0) + 1
    return {p: mpq(c) for p, c in out.items()}


def group_algebra_mul(x: dict, y: dict) -> dict:
    """Product in Q[S_n] (x then y means x*y acts as x(y(.)))."""
    out: dict = {}
    for p, a in x.items():
        for q, b in y.items():
            r = compose(p, q)
            out[r] = out.get(r, 0) + a * b
    return {r: c for r, c in out.items() if c}


def permute_signed(p: tuple, factors: tuple):
    """(sign, permuted factors) for the signed action on a tensor."""
    out = [None] * len(factors)
    for v, a in enumerate(factors):
        out[p[v]] = a
    return sign(p), tuple(out)


@lru_cache(maxsize=None)
def signed_terms(n: int, i: int) -> tuple:
    """((perm, coefficient * sign), ...) for applying e_n^(i) to tensors."""
    return tuple((p, c * sign(p)) for p, c in sorted(eulerian_idempotent(n, i).items()))


def identity(n: int) -> dict:
    return {tuple(range(n)): mpq(1)}
