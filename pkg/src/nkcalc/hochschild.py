"""Hochschild and cyclic homology of based algebras, split by weight.

Chains are tuples of basis indices (a_0, a_1, ..., a_m).  By default the
normalized complex is used (a_k != 1 for k >= 1); it is quasi-isomorphic to
the full bar complex and much smaller.  Every boundary preserves weight, so
each weight is handled as a separate finite complex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .algebra import FinitelyPresentedAlgebra
from .based import BasedAlgebra, polynomial_extension, wadd, wnonneg, wsub
from .complexes import ChainComplex
from .eulerian import signed_terms
from .linalg import Echelon, apply, image_and_kernel, rank, vaxpy


def _within(w, bound) -> bool:
    if isinstance(w, tuple):
        return all(x <= bound for x in w)
    return w <= bound


class DimensionBlowup(RuntimeError):
    pass


MAX_CHAINS = 400_000


def as_based(algebra, weight_bound=None) -> BasedAlgebra:
    if isinstance(algebra, BasedAlgebra):
        return algebra
    if isinstance(algebra, FinitelyPresentedAlgebra):
        if algebra.is_zero_dimensional and weight_bound is None:
            A = algebra.based()
            if not algebra.is_homogeneous():
                # inhomogeneous relations: forget the grading
                return _ungraded(A)
            return A
        if weight_bound is None:
            raise ValueError(f"{algebra.describe()} is infinite-dimensional; supply a weight bound")
        if not algebra.is_homogeneous():
            raise ValueError("weight truncation needs homogeneous relations")
        return algebra.based(weight_bound)
    raise TypeError(f"cannot build a basis for {algebra!r}")


def _ungraded(A: BasedAlgebra) -> BasedAlgebra:
    B = BasedAlgebra(A.field, A.labels, [0] * A.dim, A.unit, A.mul, bound=None, name=A.name)
    B.monomials = getattr(A, "monomials", None)
    B.source = getattr(A, "source", None)
    return B


class HochschildComplex:
    """The (normalized) Hochschild complex of ``A`` in degrees 0..top."""

    def __init__(self, A: BasedAlgebra, top: int, normalized: bool = True, max_chains: int = MAX_CHAINS):
        self.A = A
        self.top = top
        self.normalized = normalized
        self.max_chains = max_chains
        self.field = A.field
        self._chains: dict = {}
        self._index: dict = {}
        self._b: dict = {}
        self._B: dict = {}
        self._e: dict = {}
        slot = [i for i in range(A.dim) if not (normalized and i == A.unit)]
        self._slot_by_weight: dict = {}
        for i in slot:
            self._slot_by_weight.setdefault(A.weights[i], []).append(i)

    # ----- chain bases -----
    def weights(self, top: int | None = None):
        """Every total weight carried by some chain of degree <= top."""
        top = self.top if top is None else top
        bound = self.A.bound
        slot = list(self._slot_by_weight)
        reach = set(self.A.by_weight)
        layer = set(reach)
        for _ in range(top):
            layer = {wadd(a, b) for a in layer for b in slot}
            if bound is not None:
                layer = {w for w in layer if _within(w, bound)}
            if layer <= reach:
                break
            reach |= layer
        if bound is not None:
            reach = {w for w in reach if _within(w, bound)}
        return sorted(reach)

    def chains(self, m: int, w) -> list:
        key = (m, w)
        if key in self._chains:
            return self._chains[key]
        if m < 0:
            return []
        A = self.A
        out = []

        def rec(prefix, k, remaining):
            if k == m + 1:
                out.append(tuple(prefix))
                return
            pool = A.by_weight if k == 0 else self._slot_by_weight
            last = k == m
            for wt, idxs in pool.items():
                rest = wsub(remaining, wt)
                if not wnonneg(rest):
                    continue
                if last and (any(rest) if isinstance(rest, tuple) else rest != 0):
                    continue
                for i in idxs:
                    prefix.append(i)
                    rec(prefix, k + 1, rest)
                    prefix.pop()
                    if len(out) > self.max_chains:
                        raise DimensionBlowup(
                            f"C_{m} in weight {w} exceeds {self.max_chains} chains"
                        )

        rec([], 0, w)
        out.sort()
        self._chains[key] = out
        self._index[key] = {c: k for k, c in enumerate(out)}
        return out

    def index(self, m: int, w) -> dict:
        self.chains(m, w)
        return self._index[(m, w)]

    def dim(self, m: int, w) -> int:
        return len(self.chains(m, w))

    def _nondegenerate(self, i: int) -> bool:
        return not (self.normalized and i == self.A.unit)

    # ----- Hochschild boundary -----
    def b(self, m: int, w) -> list:
        """Columns of b: C_m -> C_{m-1} in weight w."""
        key = (m, w)
        if key in self._b:
            return self._b[key]
        A = self.A
        src = self.chains(m, w)
        if m == 0:
            cols = [{} for _ in src]
            self._b[key] = cols
            return cols
        tgt = self.index(m - 1, w)
        cols = []
        for ch in src:
            col: dict = {}
            for k in range(m):
                s = 1 if k % 2 == 0 else -1
                prod = A.mul(ch[k], ch[k + 1])
                head, tail = ch[:k], ch[k + 2:]
                for c, v in prod.items():
                    if k > 0 and not self._nondegenerate(c):
                        continue
                    t = head + (c,) + tail
                    vaxpy(col, {tgt[t]: v}, s)
            s = 1 if m % 2 == 0 else -1
            prod = A.mul(ch[m], ch[0])
            mid = ch[1:m]
            for c, v in prod.items():
                t = (c,) + mid
                vaxpy(col, {tgt[t]: v}, s)
            cols.append(col)
        self._b[key] = cols
        return cols

    # ----- Connes operator -----
    def B(self, m: int, w) -> list:
        """Columns of B: C_m -> C_{m+1} in weight w (normalized complex only)."""
        if not self.normalized:
            raise ValueError("Connes' B is implemented on the normalized complex")
        key = (m, w)
        if key in self._B:
            return self._B[key]
        A = self.A
        src = self.chains(m, w)
        tgt = self.index(m + 1, w)
        one = self.field.one
        cols = []
        for ch in src:
            col: dict = {}
            if ch[0] != A.unit:
                for i in range(m + 1):
                    s = -1 if (m * i) % 2 else 1
                    t = (A.unit,) + ch[i:] + ch[:i]
                    vaxpy(col, {tgt[t]: one}, s)
            cols.append(col)
        self._B[key] = cols
        return cols

    # ----- Hodge idempotents -----
    def e(self, m: int, i: int, w) -> list:
        """Columns of the Eulerian idempotent e_m^(i) on C_m in weight w."""
        key = (m, i, w)
        if key in self._e:
            return self._e[key]
        src = self.chains(m, w)
        if m == 0:
            one = self.field.one
            cols = [{k: one} for k in range(len(src))] if i == 0 else [{} for _ in src]
            self._e[key] = cols
            return cols
        terms = signed_terms(m, i)
        idx = self.index(m, w)
        cols = []
        for ch in src:
            col: dict = {}
            body = ch[1:]
            for p, c in terms:
                out = [None] * m
                for v, a in enumerate(body):
                    out[p[v]] = a
                t = (ch[0],) + tuple(out)
                k = idx[t]
                y = col.get(k)
                if y is None:
                    col[k] = c
                else:
                    y = y + c
                    if y:
                        col[k] = y
                    else:
                        del col[k]
            cols.append(col)
        self._e[key] = cols
        return cols

    def complex(self, w, top: int | None = None) -> ChainComplex:
        top = self.top if top is None else top
        dims = {m: self.dim(m, w) for m in range(top + 1)}
        d = {m: self.b(m, w) for m in range(1, top + 1)}
        return ChainComplex(dims, d, direction=-1, field=self.field, check=False)

    # ----- homology -----
    def hh_dim(self, m: int, w) -> int:
        return self.dim(m, w) - rank(self.b(m, w)) - rank(self.b(m + 1, w))

    def hodge_dim(self, m: int, i: int, w) -> int:
        em = self.e(m, i, w)
        r_e = rank(em)
        if not r_e:
            return 0
        bm = self.b(m, w)
        r_out = rank(apply(bm, c) for c in em)
        bm1 = self.b(m + 1, w)
        em1 = self.e(m + 1, i, w)
        r_in = rank(apply(bm1, c) for c in em1)
        return r_e - r_out - r_in

    # ----- cyclic homology via the (b, B) bicomplex -----
    def tot_blocks(self, n: int):
        return [n - 2 * p for p in range(n // 2 + 1)] if n >= 0 else []

    def tot_dim(self, n: int, w) -> int:
        return sum(self.dim(m, w) for m in self.tot_blocks(n))

    def tot_offsets(self, n: int, w) -> dict:
        off = {}
        acc = 0
        for m in self.tot_blocks(n):
            off[m] = acc
            acc += self.dim(m, w)
        return off

    def tot_d(self, n: int, w, hodge: int | None = None) -> list:
        """Columns of b + B : Tot_n -> Tot_{n-1}, optionally on the weight-``hodge`` part.

        With ``hodge`` = i, the spanning set of the source is e^(i-p) applied to
        block C_{n-2p}; columns are then images of those spanning vectors.
        """
        src_off = self.tot_offsets(n, w)
        tgt_off = self.tot_offsets(n - 1, w)
        cols = []
        for m in self.tot_blocks(n):
            p = (n - m) // 2
            bm = self.b(m, w)
            Bm = self.B(m, w) if p >= 1 else None
            if hodge is None:
                vecs = [{k: self.field.one} for k in range(self.dim(m, w))]
            else:
                vecs = self.e(m, hodge - p, w)
            for v in vecs:
                col: dict = {}
                if m >= 1 and (m - 1) in tgt_off:
                    img = apply(bm, v)
                    o = tgt_off[m - 1]
                    for k, c in img.items():
                        col[o + k] = c
                if p >= 1 and (m + 1) in tgt_off:
                    img = apply(Bm, v)
                    o = tgt_off[m + 1]
                    for k, c in img.items():
                        y = col.get(o + k)
                        col[o + k] = c if y is None else y + c
                        if not col[o + k]:
                            del col[o + k]
                cols.append(col)
        return cols

    def tot_span(self, n: int, w, hodge: int | None = None) -> list:
        """Spanning vectors (in Tot_n coordinates) of the (Hodge part of the) total space."""
        off = self.tot_offsets(n, w)
        out = []
        for m in self.tot_blocks(n):
            p = (n - m) // 2
            o = off[m]
            if hodge is None:
                vecs = [{k: self.field.one} for k in range(self.dim(m, w))]
            else:
                vecs = self.e(m, hodge - p, w)
            for v in vecs:
                out.append({o + k: c for k, c in v.items()})
        return out

    def hc_dim(self, n: int, w, hodge: int | None = None) -> int:
        if n < 0:
            return 0
        if hodge is None:
            return self.tot_dim(n, w) - rank(self.tot_d(n, w)) - rank(self.tot_d(n + 1, w))
        r_space = rank(self.tot_span(n, w, hodge))
        if not r_space:
            return 0
        return r_space - rank(self.tot_d(n, w, hodge)) - rank(self.tot_d(n + 1, w, hodge))


# ---------------------------------------------------------------------------
# results


@dataclass
class HHResult:
    """Hochschild homology dimensions, per weight and in total.

    ``certified_degrees`` lists the degrees whose dimensions are exact (all
    chains of the neighbouring degrees were built).
    """

    algebra: str
    top: int
    per_weight: dict  # (m, w) -> dim
    weights: list
    certified_degrees: list
    weight_bound: object = None
    complex: HochschildComplex | None = field(default=None, repr=False)

    def dim(self, m: int, w=None) -> int:
        if w is not None:
            return self.per_weight.get((m, w), 0)
        return sum(v for (mm, _), v in self.per_weight.items() if mm == m)

    def dims(self) -> list:
        return [self.dim(m) for m in range(self.top + 1)]

    def cycles(self, m: int, w):
        """Representing cycles of HH_m in weight w (normalized chains)."""
        C = self.complex
        return C.complex(w, top=max(m + 1, 1)).homology(m).cycles


def hochschild_homology(algebra, N: int, weight_bound=None, normalized: bool = True,
                        weights=None, max_chains: int = MAX_CHAINS) -> HHResult:
    """dim HH_m for 0 <= m <= N, per weight (all weights up to the bound)."""
    A = as_based(algebra, weight_bound)
    C = HochschildComplex(A, N + 1, normalized=normalized, max_chains=max_chains)
    ws = weights if weights is not None else C.weights()
    per = {}
    for w in ws:
        for m in range(N + 1):
            per[(m, w)] = C.hh_dim(m, w)
    name = A.name
    return HHResult(name, N, per, list(ws), list(range(N + 1)), weight_bound, C)


@dataclass
class HodgeDecomposition:
    """dim HH_m^(i) per weight, from the Eulerian idempotents."""

    algebra: str
    top: int
    per_weight: dict  # (m, i, w) -> dim
    totals: dict  # (m, w) -> dim HH_m
    weights: list
    complex: HochschildComplex = field(repr=False, default=None)

    def dim(self, m: int, i: int, w=None) -> int:
        if i < 0 or i > m:
            return 0
        if w is not None:
            return self.per_weight.get((m, i, w), 0)
        return sum(v for (mm, ii, _), v in self.per_weight.items() if (mm, ii) == (m, i))

    def total(self, m: int, w=None) -> int:
        if w is not None:
            return self.totals.get((m, w), 0)
        return sum(v for (mm, _), v in self.totals.items() if mm == m)

    def idempotent(self, m: int, i: int, w) -> list:
        return self.complex.e(m, i, w)

    def consistent(self) -> bool:
        for (m, w), t in self.totals.items():
            if sum(self.per_weight.get((m, i, w), 0) for i in range(m + 1)) != t:
                return False
        return True


def hodge_decompose(C: HochschildComplex, degrees=None, weights=None) -> HodgeDecomposition:
    degrees = range(C.top) if degrees is None else degrees
    for m in degrees:
        if m + 1 > C.top:
            raise ValueError(f"degree {m} needs chains in degree {m + 1}, beyond the complex (top {C.top})")
    ws = C.weights() if weights is None else weights
    per = {}
    tot = {}
    for w in ws:
        for m in degrees:
            tot[(m, w)] = C.hh_dim(m, w)
            for i in range(0, m + 1):
                if m > 0 and i == 0:
                    per[(m, 0, w)] = 0
                    continue
                per[(m, i, w)] = C.hodge_dim(m, i, w)
    top = max(degrees) if degrees else -1
    return HodgeDecomposition(C.A.name, top, per, tot, list(ws), C)


def hodge_decomposition(algebra, N: int, weight_bound=None, weights=None) -> HodgeDecomposition:
    A = as_based(algebra, weight_bound)
    C = HochschildComplex(A, N + 1)
    return hodge_decompose(C, range(N + 1), weights)


# ---------------------------------------------------------------------------
# cyclic homology


@dataclass
class CyclicResult:
    """dim HC_n per weight with the SBI sequence checked by ranks."""

    algebra: str
    top: int
    hc: dict  # (n, w) -> dim
    hh: dict  # (n, w) -> dim
    weights: list
    sbi_exact: bool
    sbi_failures: list
    complex: HochschildComplex = field(repr=False, default=None)

    def dim(self, n: int, w=None) -> int:
        if w is not None:
            return self.hc.get((n, w), 0)
        return sum(v for (nn, _), v in self.hc.items() if nn == n)

    def dims(self) -> list:
        return [self.dim(n) for n in range(self.top + 1)]


def _homology_basis(cols_out, cols_in, dim_space, field, span=None):
    """Return (cycles echelon, boundaries echelon) for a vector space of dimension ``dim_space``."""
    if span is None:
        span = [{k: field.one} for k in range(dim_space)]
    images = [apply(cols_out, v) if cols_out is not None else {} for v in span]
    _, kern = image_and_kernel(images)
    cyc = Echelon()
    for kv in kern:
        vec: dict = {}
        for j, c in kv.items():
            vaxpy(vec, span[j], c)
        cyc.add(vec)
    bnd = Echelon()
    for c in cols_in:
        bnd.add(c)
    return cyc, bnd


def _map_rank_on_homology(f_cols, src_cyc, tgt_bnd) -> int:
    """Rank of the map induced on homology by ``f`` (columns indexed by source coords)."""
    ech = Echelon()
    for v in tgt_bnd.basis():
        ech.add(v)
    base = ech.rank
    for z in src_cyc.basis():
        ech.add(apply(f_cols, z))
    return ech.rank - base


def sbi_check(C: HochschildComplex, w, N: int) -> list:
    """Check exactness of ... -> HH_n -I-> HC_n -S-> HC_{n-2} -B-> HH_{n-1} -> ... up to degree N.

    Returns a list of failures (empty when exact).  Exactness at each spot is
    checked as rank(in) + rank(out) == dim(spot).
    """
    F = C.field
    hh = {}
    hc = {}
    for n in range(-2, N + 2):
        if n < 0:
            continue
        hh[n] = _homology_basis(C.b(n, w), C.b(n + 1, w), C.dim(n, w), F)
        hc[n] = _homology_basis(C.tot_d(n, w), C.tot_d(n + 1, w), C.tot_dim(n, w), F)

    def hh_dim(n):
        return hh[n][0].rank - hh[n][1].rank if n in hh else 0

    def hc_dim(n):
        return hc[n][0].rank - hc[n][1].rank if n in hc else 0

    def I_cols(n):
        # C_n sits as the p = 0 block of Tot_n at offset 0
        return [{k: F.one} for k in range(C.dim(n, w))]

    def S_cols(n):
        off = C.tot_offsets(n, w)
        off2 = C.tot_offsets(n - 2, w)
        cols = []
        for m in C.tot_blocks(n):
            for k in range(C.dim(m, w)):
                cols.append({} if m == n else {off2[m] + k: F.one})
        return cols

    def conn_cols(n):
        # HC_{n-1} -> HH_n : take the C_{n-1} block and apply B
        off = C.tot_offsets(n - 1, w)
        Bm = C.B(n - 1, w)
        cols = []
        for m in C.tot_blocks(n - 1):
            for k in range(C.dim(m, w)):
                cols.append(dict(Bm[k]) if m == n - 1 else {})
        return cols

    def r_I(n):
        return _map_rank_on_homology(I_cols(n), hh[n][0], hc[n][1]) if n in hh else 0

    def r_S(n):
        if n not in hc or n - 2 not in hc:
            return 0
        return _map_rank_on_homology(S_cols(n), hc[n][0], hc[n - 2][1])

    def r_conn(n):  # HC_{n-1} -> HH_n
        if n - 1 not in hc or n not in hh:
            return 0
        return _map_rank_on_homology(conn_cols(n), hc[n - 1][0], hh[n][1])

    failures = []
    for n in range(0, N + 1):
        if r_conn(n) + r_I(n) != hh_dim(n):
            failures.append(("HH", n, w))
        if r_I(n) + r_S(n) != hc_dim(n):
            failures.append(("HC", n, w))
        if n - 2 >= 0 and r_S(n) + r_conn(n - 1) != hc_dim(n - 2):
            failures.append(("HC-2", n, w))
    return failures


def cyclic_homology(algebra, N: int, weight_bound=None, weights=None, check_sbi: bool = True,
                    max_chains: int = MAX_CHAINS) -> CyclicResult:
    A = as_based(algebra, weight_bound)
    C = HochschildComplex(A, N + 2, max_chains=max_chains)
    ws = C.weights() if weights is None else weights
    hc, hh, fails = {}, {}, []
    for w in ws:
        for n in range(N + 1):
            hc[(n, w)] = C.hc_dim(n, w)
            hh[(n, w)] = C.hh_dim(n, w)
        if check_sbi:
            fails.extend(sbi_check(C, w, N))
    return CyclicResult(A.name, N, hc, hh, list(ws), not fails, fails, C)


def periodicity_vanishes(C: HochschildComplex, w, N: int) -> bool:
    """Check that S: HC_n -> HC_{n-2} is zero in weight w for 2 <= n <= N."""
    F = C.field
    for n in range(2, N + 1):
        cyc, _ = _homology_basis(C.tot_d(n, w), C.tot_d(n + 1, w), C.tot_dim(n, w), F)
        _, bnd = _homology_basis(C.tot_d(n - 2, w), C.tot_d(n - 1, w), C.tot_dim(n - 2, w), F)
        off = C.tot_offsets(n, w)
        off2 = C.tot_offsets(n - 2, w)
        cols = []
        for m in C.tot_blocks(n):
            for k in range(C.dim(m, w)):
                cols.append({} if m == n else {off2[m] + k: F.one})
        if _map_rank_on_homology(cols, cyc, bnd):
            return False
    return True


def hc_hodge(C: HochschildComplex, n: int, i: int, w) -> int:
    return C.hc_dim(n, w, hodge=i)


# ---------------------------------------------------------------------------
# relative Hochschild homology


class NotNilpotent(ValueError):
    pass


def ideal_subspace(algebra: FinitelyPresentedAlgebra, A: BasedAlgebra, generators) -> Echelon:
    ech = Echelon()
    for g in generators:
        gv = algebra.to_vector(g, A)
        for i in range(A.dim):
            ech.add(A.mul_vec(gv, {i: A.field.one}))
    return ech


def nilpotency_index(A: BasedAlgebra, ideal: Echelon) -> int:
    """Least N with I^N = 0; raises NotNilpotent otherwise."""
    J = ideal.basis()
    power, N = J, 1
    while power:
        N += 1
        if N > A.dim + 1:
            raise NotNilpotent("ideal is not nilpotent")
        ech = Echelon()
        for u in power:
            for v in J:
                ech.add(A.mul_vec(u, v))
        power = ech.basis()
    return N


@dataclass
class RelativeHH:
    algebra: str
    top: int
    per_weight: dict  # (m, w) -> dim HH_m(A, I)
    nilpotency: int

    def dim(self, m: int, w=None) -> int:
        if w is not None:
            return self.per_weight.get((m, w), 0)
        return sum(v for (mm, _), v in self.per_weight.items() if mm == m)

    def dims(self) -> list:
        return [self.dim(m) for m in range(self.top + 1)]


def relative_hh(algebra: FinitelyPresentedAlgebra, ideal, N: int) -> RelativeHH:
    """HH_m(A, I) for a nilpotent ideal I, from ker(C(A) -> C(A/I)).

    ``ideal`` is a list of polynomials (or strings in the algebra's variables).
    """
    from .parsing import parse_polynomial

    gens = [parse_polynomial(g, algebra.names, algebra.field) if isinstance(g, str) else g for g in ideal]
    A = as_based(algebra)
    I = ideal_subspace(algebra, A, gens)
    nil = nilpotency_index(A, I)
    quot = algebra.quotient(gens)
    B = quot.based()
    if not A.graded:
        B = _ungraded(B)
    # image of each basis monomial of A in the basis of A/I
    pi = [quot.to_vector(algebra.from_vector({k: A.field.one}, A), B) for k in range(A.dim)]
    CA = HochschildComplex(A, N + 1)
    CB = HochschildComplex(B, N + 1)
    per = {}
    for w in CA.weights():
        kernels = {}
        for m in range(N + 2):
            kernels[m] = _kernel_of_chain_map(CA, CB, pi, m, w)
        for m in range(N + 1):
            Km = kernels[m]
            r_out = rank(apply(CA.b(m, w), v) for v in Km) if m else 0
            r_in = rank(apply(CA.b(m + 1, w), v) for v in kernels[m + 1])
            per[(m, w)] = len(Km) - r_out - r_in
    return RelativeHH(algebra.describe(), N, per, nil)


def _kernel_of_chain_map(CA, CB, pi, m, w) -> list:
    src = CA.chains(m, w)
    tgt = CB.index(m, w)
    unit = CB.A.unit
    cols = []
    for ch in src:
        col: dict = {(): CA.field.one}
        for k, a in enumerate(ch):
            nxt: dict = {}
            for t, c in col.items():
                for b, v in pi[a].items():
                    if k >= 1 and b == unit:
                        continue
                    key = t + (b,)
                    y = nxt.get(key)
                    nxt[key] = c * v if y is None else y + c * v
            col = {t: c for t, c in nxt.items() if c}
        cols.append({tgt[t]: c for t, c in col.items()})
    _, ker = image_and_kernel(cols)
    return ker


# ---------------------------------------------------------------------------
# A[t]: the NHH / NHC bigrading


@dataclass
class ExtensionCheck:
    """Direct weight-j homology of A[t] next to its Künneth prediction."""

    algebra: str
    n_max: int
    weight_max: int
    nhh: dict  # (n, i, j) -> direct dim
    nhc: dict
    nhh_predicted: dict
    nhc_predicted: dict
    hodge: HodgeDecomposition = field(repr=False, default=None)

    @property
    def nhh_matches(self) -> bool:
        return self.nhh == self.nhh_predicted

    @property
    def nhc_matches(self) -> bool:
        return self.nhc == self.nhc_predicted

    def mismatches(self) -> list:
        out = []
        for k in self.nhh:
            if self.nhh[k] != self.nhh_predicted[k]:
                out.append(("NHH",) + k + (self.nhh[k], self.nhh_predicted[k]))
            if self.nhc[k] != self.nhc_predicted[k]:
                out.append(("NHC",) + k + (self.nhc[k], self.nhc_predicted[k]))
        return out


def weighted_polynomial_extension(algebra, n_max: int, weight_max: int) -> ExtensionCheck:
    """Hodge pieces of HH and HC of A[t] in t-weights 1..weight_max, with predictions.

    Predicted: NHH_n^(i) = HH_n^(i)(A) + HH_{n-1}^(i-1)(A) and NHC_n^(i) = HH_n^(i)(A)
    in every positive t-weight.
    """
    A = _ungraded(as_based(algebra))
    H = hodge_decompose(HochschildComplex(A, n_max + 1), range(n_max + 1))

    def h(n, i):
        if n < 0 or i < 0 or i > n:
            return 0
        return H.dim(n, i)

    At = polynomial_extension(A, weight_max)
    C = HochschildComplex(At, n_max + 1)
    nhh, nhc, p_hh, p_hc = {}, {}, {}, {}
    for j in range(1, weight_max + 1):
        for n in range(n_max + 1):
            for i in range(n + 1):
                key = (n, i, j)
                nhh[key] = C.hodge_dim(n, i, j)
                nhc[key] = C.hc_dim(n, j, hodge=i)
                p_hh[key] = h(n, i) + h(n - 1, i - 1)
                p_hc[key] = h(n, i)
    return ExtensionCheck(A.name, n_max, weight_max, nhh, nhc, p_hh, p_hc, H)


def iterated_prediction(h, p: int, n: int, i: int) -> int:
    """Multiplicity count for N^pHC_n^(i) in one multi-weight: sum_j C(p-1, j) h(n-j, i-j)."""
    from math import comb

    if p < 1:
        raise ValueError("p >= 1")
    return sum(comb(p - 1, j) * h(n - j, i - j) for j in range(p))


def iterated_recursion_holds(h, p_max: int, n_max: int) -> bool:
    """E_p(n, i) = E_{p-1}(n, i) + E_{p-1}(n-1, i-1), with E_1 = h."""
    for p in range(2, p_max + 1):
        for n in range(n_max + 1):
            for i in range(n + 1):
                lhs = iterated_prediction(h, p, n, i)
                rhs = iterated_prediction(h, p - 1, n, i) + iterated_prediction(h, p - 1, n - 1, i - 1)
                if lhs != rhs:
                    return False
    return True


def iterated_direct(algebra, n_max: int, p: int = 2) -> dict:
    """Hodge pieces of HC(A[t_1..t_p]) in multi-weight (1, ..., 1), computed directly."""
    A = _ungraded(as_based(algebra))
    At = polynomial_extension(A, 1, nt=p)
    C = HochschildComplex(At, n_max + 1)
    w = 1 if p == 1 else (1,) * p  # one variable uses plain int weights
    return {(n, i): C.hc_dim(n, w, hodge=i) for n in range(n_max + 1) for i in range(n + 1)}
