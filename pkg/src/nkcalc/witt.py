"""Cartier operators on weight-truncated modules M (x) tQ[t].

An element of the model is a dict {j: vector in M_j}, 1 <= j <= N.  The
operators are

* homotheties [r]: weight j -> j, acting by r^j,
* Verschiebung V_m: weight j -> mj, a copy (t^j -> t^{mj}),
* Frobenius F_m: weight mj -> j, multiplication by m; other weights die,

and the module structure r . (x t^j) = (r x) t^j.  The typical piece is the
simultaneous eigenspace {x : [r]x = r x}.  In characteristic zero big Witt
vectors are sequences of ghost components and act weight by weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable

from .fields import QQ
from .linalg import Subquotient, apply, image_and_kernel, rank, vaxpy
from .polynomials import Polynomial


class WeightOverflow(ValueError):
    """An operator would leave the truncation 1..N."""


# ---------------------------------------------------------------------------
# base-algebra elements acting on a finite-dimensional module


class AlgebraAction:
    """Commuting matrices for the generators of an algebra acting on Q^dim.

    Elements are scalars, generator names, or Polynomials in the generators.
    """

    def __init__(self, names, matrices, dim: int, field=QQ):
        self.names = list(names)
        self.matrices = [list(m) for m in matrices]
        self.dim = dim
        self.field = field
        self._cache: dict = {}

    def identity(self) -> list:
        return [{k: self.field.one} for k in range(self.dim)]

    def matrix_of(self, r) -> list:
        if isinstance(r, list):
            return r
        key = r if not isinstance(r, Polynomial) else ("poly", tuple(sorted(r.terms.items())))
        if key in self._cache:
            return self._cache[key]
        if isinstance(r, str):
            from .parsing import parse_polynomial

            r = parse_polynomial(r, self.names, self.field)
        if isinstance(r, Polynomial):
            M = [{} for _ in range(self.dim)]
            for e, c in r.terms.items():
                T = self.identity()
                for g, k in enumerate(e):
                    for _ in range(k):
                        T = [apply(self.matrices[g], col) for col in T]
                for col_out, col in zip(M, T):
                    vaxpy(col_out, col, c)
        else:
            c = self.field(r) if not isinstance(r, Fraction) else self.field(r)
            M = [{k: c} for k in range(self.dim)] if c else [{} for _ in range(self.dim)]
        self._cache[key] = M
        return M

    def power(self, r, k: int) -> list:
        M = self.matrix_of(r)
        T = self.identity()
        for _ in range(k):
            T = [apply(M, col) for col in T]
        return T

    def multiply(self, r, s):
        """A representative of rs suitable for matrix_of."""
        A, B = self.matrix_of(r), self.matrix_of(s)
        return [apply(A, col) for col in B]

    def pow_element(self, r, k: int):
        return self.power(r, k)


# ---------------------------------------------------------------------------
# the module


class CartierModule:
    """Weights 1..N with operator matrices supplied by callables.

    ``homothety(r, j)``, ``action(r, j)``: columns on M_j.
    ``verschiebung(m, j)``: columns M_j -> M_{mj}.
    ``frobenius(m, j)``: columns M_j -> M_{j/m} (only called when m | j).
    Any callable may be None when that structure is not available.
    """

    def __init__(self, N: int, dims: dict, homothety=None, action=None, verschiebung=None,
                 frobenius=None, field=QQ, name: str = ""):
        self.N = N
        self.dims = {j: dims.get(j, 0) for j in range(1, N + 1)}
        self._hom = homothety
        self._act = action
        self._ver = verschiebung
        self._fro = frobenius
        self.field = field
        self.name = name

    # ----- element-level operators -----
    def _check(self, x):
        for j in x:
            if not 1 <= j <= self.N:
                raise WeightOverflow(f"weight {j} outside 1..{self.N}")

    def basis_element(self, j: int, k: int = 0) -> dict:
        return {j: {k: self.field.one}}

    def homothety(self, r, x: dict) -> dict:
        self._check(x)
        return _clean({j: apply(self._hom(r, j), v) for j, v in x.items()})

    def act(self, r, x: dict) -> dict:
        self._check(x)
        return _clean({j: apply(self._act(r, j), v) for j, v in x.items()})

    def V(self, m: int, x: dict) -> dict:
        self._check(x)
        out = {}
        for j, v in x.items():
            if not v:
                continue
            if m * j > self.N:
                raise WeightOverflow(f"V_{m} sends weight {j} to {m * j} > N = {self.N}")
            out[m * j] = apply(self._ver(m, j), v)
        return _clean(out)

    def F(self, m: int, x: dict) -> dict:
        self._check(x)
        out = {}
        for j, v in x.items():
            if j % m == 0 and v:
                out[j // m] = apply(self._fro(m, j), v)
        return _clean(out)

    def scale(self, c, x: dict) -> dict:
        c = self.field(c)
        return _clean({j: {k: c * a for k, a in v.items()} for j, v in x.items()})

    def witt(self, w: "WittVector", x: dict) -> dict:
        """Ghost components act weight by weight: (r_1, r_2, ...) . sum x_j t^j = sum (r_j x_j) t^j."""
        self._check(x)
        out = {}
        for j, v in x.items():
            if j > len(w.ghost):
                raise WeightOverflow(f"Witt vector truncated at {len(w.ghost)} < weight {j}")
            out[j] = apply(self._act(w.ghost[j - 1], j), v)
        return _clean(out)

    def __repr__(self):
        return f"CartierModule({self.name}, N={self.N}, dims={[self.dims[j] for j in range(1, self.N + 1)]})"


def _clean(x: dict) -> dict:
    return {j: v for j, v in x.items() if v}


def act(op, module: CartierModule, element: dict) -> dict:
    """Apply an operator given as ("[r]", r), ("V", m), ("F", m), ("r", r) or a WittVector."""
    if isinstance(op, WittVector):
        return module.witt(op, element)
    kind, arg = op
    if kind in ("[]", "[r]", "homothety"):
        return module.homothety(arg, element)
    if kind == "V":
        return module.V(arg, element)
    if kind == "F":
        return module.F(arg, element)
    if kind in ("r", "act"):
        return module.act(arg, element)
    raise ValueError(f"unknown operator {kind!r}")


def tensor_model(action: AlgebraAction, N: int, name: str = "") -> CartierModule:
    """M (x) tQ[t] truncated at weight N."""
    one = action.field.one
    ident = action.identity()

    def hom(r, j):
        return action.power(r, j)

    def mult(r, j):
        return action.matrix_of(r)

    def ver(m, j):
        return ident

    def fro(m, j):
        c = action.field(m)
        return [{k: c * one} for k in range(action.dim)]

    return CartierModule(N, {j: action.dim for j in range(1, N + 1)}, hom, mult, ver, fro, action.field, name)


def polynomial_line_model(N: int = 12) -> CartierModule:
    """tQ[t] itself (M = Q, no algebra generators)."""
    return tensor_model(AlgebraAction([], [], 1), N, name="tQ[t]")


@dataclass
class WittVector:
    """Truncated ghost components (r_1, ..., r_N); ring operations are componentwise."""

    ghost: list

    def __add__(self, other):
        return WittVector([_add(a, b) for a, b in zip(self.ghost, other.ghost)])

    def __mul__(self, other):
        return WittVector([_mul(a, b) for a, b in zip(self.ghost, other.ghost)])

    @classmethod
    def constant(cls, r, N: int):
        return cls([r] * N)


def _add(a, b):
    return a + b


def _mul(a, b):
    return a * b


# ---------------------------------------------------------------------------
# typical piece and relations


@dataclass
class TypicalPieceResult:
    per_weight: dict  # j -> dim of {x in M_j : [r]x = r x for all test r}
    bases: dict
    module_dims: dict
    test_elements: list

    @property
    def dim(self) -> int:
        return sum(self.per_weight.values())

    @property
    def tensor_shape_holds(self) -> bool:
        """Every weight piece has the dimension of the typical piece."""
        return all(d == self.dim for d in self.module_dims.values())


def typical_piece(module: CartierModule, test_elements) -> TypicalPieceResult:
    per, bases = {}, {}
    for j in range(1, module.N + 1):
        d = module.dims[j]
        if d == 0:
            per[j], bases[j] = 0, []
            continue
        rows_cols = []
        for r in test_elements:
            H = module._hom(r, j)
            R = module._act(r, j)
            rows_cols.append([_sub(h, a) for h, a in zip(H, R)])
        # x in the kernel of every stacked map: stack by offsetting row indices
        stacked = []
        for k in range(d):
            col = {}
            for t, cols in enumerate(rows_cols):
                for i, c in cols[k].items():
                    col[(t, i)] = c
            stacked.append(col)
        _, ker = image_and_kernel(stacked)
        per[j] = len(ker)
        bases[j] = ker
    return TypicalPieceResult(per, bases, dict(module.dims), list(test_elements))


def _sub(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, c in v.items():
        y = out.get(k)
        out[k] = -c if y is None else y - c
        if not out[k]:
            del out[k]
    return out


@dataclass
class RelationReport:
    checked: dict = field(default_factory=dict)  # identity -> number of instances
    failures: list = field(default_factory=list)  # (identity, witness, lhs, rhs)
    skipped: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def _record(self, name, witness, lhs, rhs):
        self.checked[name] = self.checked.get(name, 0) + 1
        if lhs != rhs:
            self.failures.append((name, witness, lhs, rhs))


def check_relations(module: CartierModule, m_max: int = 4, elements=None) -> RelationReport:
    """Check the Cartier identities on every basis element inside the truncation."""
    rep = RelationReport()
    N = module.N
    elements = list(elements) if elements is not None else [2, 3]
    basis = [(j, k) for j in range(1, N + 1) for k in range(module.dims[j])]
    ms = range(1, m_max + 1)
    have_F = module._fro is not None
    have_V = module._ver is not None
    have_H = module._hom is not None
    for (j, k) in basis:
        x = module.basis_element(j, k)
        w = (j, k)
        if have_F and have_V:
            for m in ms:
                if m * j <= N:
                    rep._record(f"F_m V_m = m", (m,) + w, module.F(m, module.V(m, x)), module.scale(m, x))
        if have_V:
            for m in ms:
                for m2 in ms:
                    if m * m2 * j <= N:
                        rep._record("V_m V_m' = V_mm'", (m, m2) + w, module.V(m, module.V(m2, x)), module.V(m * m2, x))
        if have_F:
            for m in ms:
                for m2 in ms:
                    rep._record("F_m F_m' = F_mm'", (m, m2) + w, module.F(m, module.F(m2, x)), module.F(m * m2, x))
        if have_F and have_V:
            for m in ms:
                for m2 in ms:
                    if gcd(m, m2) == 1 and m2 * j <= N:
                        rep._record("F_m V_m' = V_m' F_m", (m, m2) + w, module.F(m, module.V(m2, x)), module.V(m2, module.F(m, x)))
        if have_H:
            for r in elements:
                for s in elements:
                    rs = _product(r, s)
                    rep._record("[r][s] = [rs]", (r, s) + w, module.homothety(r, module.homothety(s, x)), module.homothety(rs, x))
                if have_V:
                    for m in ms:
                        if m * j <= N:
                            rep._record("[r] V_m = V_m [r^m]", (r, m) + w, module.homothety(r, module.V(m, x)), module.V(m, module.homothety(_power(r, m), x)))
                if have_F:
                    for m in ms:
                        rep._record("F_m [r] = [r^m] F_m", (r, m) + w, module.F(m, module.homothety(r, x)), module.homothety(_power(r, m), module.F(m, x)))
    if not have_F:
        rep.skipped.append("identities involving F_m (no Frobenius on this model)")
    if not have_V:
        rep.skipped.append("identities involving V_m (no Verschiebung on this model)")
    return rep


def _product(r, s):
    if isinstance(r, Polynomial) or isinstance(s, Polynomial):
        return r * s
    if isinstance(r, str) or isinstance(s, str):
        return f"({r})*({s})"
    return r * s


def _power(r, m):
    if isinstance(r, str):
        return f"({r})^{m}"
    return r ** m


# ---------------------------------------------------------------------------
# models coming from Hochschild homology


def hh_action(algebra, n: int, i: int) -> AlgebraAction:
    """HH_n^(i)(A) as an A-module: generators act on the a_0 slot."""
    from .hochschild import HochschildComplex, _ungraded, as_based

    A = _ungraded(as_based(algebra))
    C = HochschildComplex(A, n + 1)
    Q = _hodge_subquotient(C, n, i, 0)
    mats = []
    for g in range(algebra.nvars):
        gv = algebra.to_vector(algebra.var(g), A)
        f = _slot0_multiplication(C, n, 0, gv)
        mats.append(Q.induced(f, Q))
    return AlgebraAction(algebra.names, mats, Q.dim, algebra.field)


def _hodge_subquotient(C, n, i, w) -> Subquotient:
    em = C.e(n, i, w)
    bm = C.b(n, w)
    images = [apply(bm, v) for v in em]
    _, ker = image_and_kernel(images)
    cycles = []
    for combo in ker:
        z: dict = {}
        for k, c in combo.items():
            vaxpy(z, em[k], c)
        if z:
            cycles.append(z)
    bnd = [apply(C.b(n + 1, w), v) for v in C.e(n + 1, i, w)]
    return Subquotient(cycles, bnd)


def _slot0_multiplication(C, n, w, gv: dict) -> list:
    A = C.A
    idx = C.index(n, w)
    cols = []
    for ch in C.chains(n, w):
        col: dict = {}
        prod = A.mul_vec(gv, {ch[0]: A.field.one})
        for a, c in prod.items():
            t = (a,) + ch[1:]
            col[idx[t]] = c
        cols.append(col)
    return cols


def hh_tensor_model(algebra, n: int, i: int, N: int) -> CartierModule:
    """The model HH_n^(i)(A) (x) tQ[t] of the Hodge piece NHC_n^(i)."""
    return tensor_model(hh_action(algebra, n, i), N, name=f"HH_{n}^({i}) (x) tQ[t]")


def nhc_model(algebra, n: int, i: int, N: int) -> CartierModule:
    """NHC_n^(i) computed from the (b, B) complex of A[t], weights 1..N.

    Homotheties by rational scalars and V_m are induced by the algebra maps
    t -> rt and t -> t^m; the transfer F_m and homotheties by elements of A are
    not modelled here.
    """
    from .based import polynomial_extension
    from .hochschild import HochschildComplex, _ungraded, as_based

    A = _ungraded(as_based(algebra))
    At = polynomial_extension(A, N)
    C = HochschildComplex(At, n + 1)
    pairs = [(a, s) for s in range(N + 1) for a in range(A.dim)]
    index = {p: k for k, p in enumerate(pairs)}
    spaces = {}
    for j in range(1, N + 1):
        span = C.tot_span(n, j, hodge=i)
        dcols = C.tot_d(n, j, hodge=i)
        _, ker = image_and_kernel(dcols)
        cycles = []
        for combo in ker:
            z: dict = {}
            for k, c in combo.items():
                vaxpy(z, span[k], c)
            if z:
                cycles.append(z)
        bnd = C.tot_d(n + 1, j, hodge=i)
        spaces[j] = Subquotient(cycles, bnd)

    def tot_map(j, j2, f_index):
        """Columns of the chain map induced by a basis substitution, Tot_n(j) -> Tot_n(j2)."""
        src_off = C.tot_offsets(n, j)
        tgt_off = C.tot_offsets(n, j2)
        cols = []
        for m in C.tot_blocks(n):
            tidx = C.index(m, j2)
            for ch in C.chains(m, j):
                coeff = At.field.one
                image = []
                for b in ch:
                    nb, c = f_index(b)
                    image.append(nb)
                    coeff = coeff * c
                cols.append({tgt_off[m] + tidx[tuple(image)]: coeff})
        return cols

    def hom(r, j):
        rr = QQ(r)

        def f(b):
            a, s = pairs[b]
            return b, rr ** s

        return spaces[j].induced(tot_map(j, j, f), spaces[j])

    def mult(r, j):
        rr = QQ(r)
        return [{k: rr} for k in range(spaces[j].dim)]

    def ver(m, j):
        def f(b):
            a, s = pairs[b]
            return index[(a, m * s)], QQ.one

        return spaces[j].induced(tot_map(j, m * j, f), spaces[m * j])

    return CartierModule(N, {j: spaces[j].dim for j in range(1, N + 1)}, hom, mult, ver, None, QQ,
                         name=f"NHC_{n}^({i})")
