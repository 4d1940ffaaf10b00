"""Kaehler differentials, de Rham maps, torsion, and cdh forms on supported rings.

Omega^p_{R/Q} for R = F[x_1..x_n]/I is presented on the wedge monomials
dx_J (J increasing) modulo df ^ dx_K for the generators f of I.  Over
F = Q(u) the differentials are absolute: a generator du is added and d acts
on coefficients by d/du, so Omega^1_{F/Q} = F du.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .algebra import FinitelyPresentedAlgebra
from .fields import QQ
from .linalg import Echelon, apply, compose, image_and_kernel, is_zero_map, rank
from .modules import PresentedModule, TruncationError, induced_map, multiplication_map
from .polynomials import Polynomial
from .semigroup import NumericalSemigroup, recognize_semigroup_ring


class UnsupportedRing(ValueError):
    """Raised outside the supported classes (Artinian rings, numerical-semigroup curves)."""


class ZeroDivisorError(ValueError):
    pass


class NotReduced(ValueError):
    pass


# ---------------------------------------------------------------------------
# exterior calculus on presentations


def diff_names(algebra: FinitelyPresentedAlgebra, absolute: bool = True) -> list:
    names = [f"d{n}" for n in algebra.names]
    if absolute and algebra.field is not QQ:
        names.append(f"d{algebra.field.var}")
    return names


def one_form(algebra: FinitelyPresentedAlgebra, f: Polynomial, absolute: bool = True) -> dict:
    """df as {index: coefficient}; index nvars stands for du over Q(u)."""
    out = {}
    for j in range(algebra.nvars):
        c = f.diff(j)
        if c:
            out[j] = c
    if absolute and algebra.field is not QQ:
        c = f.coefficient_derivative()
        if c:
            out[algebra.nvars] = c
    return out


def wedge_index(j: int, K: tuple):
    """dx_j ^ dx_K = sign * dx_J; returns (sign, J) or None."""
    if j in K:
        return None
    pos = sum(1 for k in K if k < j)
    J = tuple(sorted(K + (j,)))
    return (-1 if pos % 2 else 1), J


class DifferentialModule(PresentedModule):
    """Omega^p of a finitely presented algebra, as a PresentedModule on the dx_J."""

    def __init__(self, algebra, p: int, bound=None, absolute: bool = True):
        if p < 0:
            raise ValueError("p must be >= 0")
        self.p = p
        self.absolute = absolute
        names = diff_names(algebra, absolute)
        nd = len(names)
        self.nd = nd
        self.index_sets = list(combinations(range(nd), p))
        self.position = {J: k for k, J in enumerate(self.index_sets)}
        var_w = list(algebra.weights) if algebra.weights else [0] * algebra.nvars
        var_w = var_w + [0] * (nd - algebra.nvars)
        self.var_weights = var_w
        gen_w = [sum(var_w[j] for j in J) for J in self.index_sets]
        labels = ["1" if not J else "^".join(names[j] for j in J) for J in self.index_sets]
        zero = Polynomial(algebra.nvars, {}, algebra.field)
        rels = []
        if p >= 1:
            for f in algebra.generators:
                df = one_form(algebra, f, absolute)
                for K in combinations(range(nd), p - 1):
                    rel = [zero] * len(self.index_sets)
                    for j, c in df.items():
                        w = wedge_index(j, K)
                        if w is None:
                            continue
                        s, J = w
                        k = self.position[J]
                        rel[k] = rel[k] + (c if s > 0 else -c)
                    if any(rel):
                        rels.append(rel)
        super().__init__(algebra, gen_w, rels, labels, bound, name=f"Omega^{p}({algebra.describe()})")

    def with_bound(self, bound: int) -> "DifferentialModule":
        return DifferentialModule(self.algebra, self.p, bound, self.absolute)

    def form(self, coeffs: dict) -> list:
        """Element from {J: polynomial}."""
        zero = Polynomial(self.algebra.nvars, {}, self.algebra.field)
        out = [zero] * len(self.index_sets)
        for J, c in coeffs.items():
            out[self.position[tuple(J)]] = out[self.position[tuple(J)]] + c
        return out


def kaehler(algebra: FinitelyPresentedAlgebra, p: int, bound: int | None = None, absolute: bool = True) -> DifferentialModule:
    """Omega^p_{R/Q} (absolute over Q(u) when the base field is Q(u))."""
    return DifferentialModule(algebra, p, bound, absolute)


def exterior_derivative(M: DifferentialModule, element) -> dict:
    """d of a p-form given as a list over M.index_sets; returns {J: polynomial} for p+1."""
    A = M.algebra
    out: dict = {}
    for K, c in zip(M.index_sets, element):
        if not c:
            continue
        for j, a in one_form(A, c, M.absolute).items():
            w = wedge_index(j, K)
            if w is None:
                continue
            s, J = w
            term = a if s > 0 else -a
            out[J] = out[J] + term if J in out else term
    return {J: c for J, c in out.items() if c}


@dataclass
class DeRhamMap:
    """d: Omega^p -> Omega^{p+1} per weight, on the bases of the module pieces."""

    source: DifferentialModule
    target: DifferentialModule
    matrices: dict  # weight -> columns

    def matrix(self, w) -> list:
        return self.matrices[w]


def de_rham_map(algebra: FinitelyPresentedAlgebra, p: int, bound: int | None = None) -> DeRhamMap:
    if algebra.field is not QQ:
        raise ValueError("d is only Q-linear; de Rham matrices are built for algebras over Q")
    if bound is None and not algebra.is_zero_dimensional:
        raise TruncationError(f"{algebra.describe()} is infinite-dimensional; a weight bound is required")
    src = kaehler(algebra, p, bound)
    tgt = kaehler(algebra, p + 1, bound)
    mats = {}
    for w in src.weights():
        mats[w] = induced_map(src, tgt, lambda pos: tgt.form(exterior_derivative(src, src.element_of(pos))), w)
    return DeRhamMap(src, tgt, mats)


def de_rham_checks(algebra: FinitelyPresentedAlgebra, p_max: int, bound: int | None = None) -> dict:
    """d o d = 0 in every weight and the Leibniz rule on pairs of basis monomials."""
    maps = [de_rham_map(algebra, p, bound) for p in range(p_max + 1)]
    dd = True
    for p in range(p_max):
        for w, m in maps[p].matrices.items():
            nxt = maps[p + 1].matrices.get(w)
            if nxt is not None and not is_zero_map(compose(nxt, m)):
                dd = False
    # Leibniz: d(ab) = a db + b da in Omega^1
    M0, M1 = maps[0].source, maps[0].target
    A = M0.based
    leibniz = True
    for i in range(A.dim):
        for j in range(i, A.dim):
            wa, wb = A.weights[i], A.weights[j]
            if bound is not None and wa + wb > bound:
                continue
            a = Polynomial.monomial(A.monomials[i], algebra.field.one, algebra.field)
            b = Polynomial.monomial(A.monomials[j], algebra.field.one, algebra.field)
            lhs = M1.form(exterior_derivative(M0, [a * b]))
            da = exterior_derivative(M0, [a])
            db = exterior_derivative(M0, [b])
            rhs_terms: dict = {}
            for J, c in da.items():
                rhs_terms[J] = rhs_terms.get(J, 0) + b * c if J in rhs_terms else b * c
            for J, c in db.items():
                rhs_terms[J] = rhs_terms[J] + a * c if J in rhs_terms else a * c
            rhs = M1.form(rhs_terms)
            w = wa + wb
            diff = [x - y for x, y in zip(lhs, rhs)]
            if M1.coords(diff, w):
                leibniz = False
    return {"d_squared_zero": dd, "leibniz": leibniz}


# ---------------------------------------------------------------------------
# reducedness and nonzerodivisors


def certify_reduced(algebra: FinitelyPresentedAlgebra, bound: int | None = None) -> str:
    """Return how reducedness was certified; raise NotReduced if it fails.

    Tried in order: construction hint, nilradical (zero-dimensional), a
    squarefree initial ideal, and for graded curves an injection into Q[t]
    sending x_i to t^wt(x_i) (checked up to the bound).
    """
    if algebra._reduced_hint is not None:
        if algebra._reduced_hint:
            return "construction"
        raise NotReduced(f"{algebra.describe()} is not reduced")
    if algebra.is_zero_dimensional:
        if algebra.nilradical().generators:
            raise NotReduced(f"{algebra.describe()} is not reduced")
        return "nilradical"
    if all(max(lm) <= 1 for lm in algebra.leading_monomials):
        return "squarefree initial ideal"
    if recognize_semigroup_ring(algebra) is not None:
        return "monomial curve"
    if algebra.graded and bound is not None:
        A = algebra.based(bound)
        if all(len(v) <= 1 for v in A.by_weight.values()):
            return f"embeds in Q[t] up to weight {bound}"
    raise NotReduced(f"cannot certify that {algebra.describe()} is reduced")


def is_nonzerodivisor(algebra: FinitelyPresentedAlgebra, s: Polynomial, bound: int | None = None) -> bool:
    R = PresentedModule(algebra, [0], [], ["1"], bound)
    ws = _element_weight(algebra, s)
    for w in R.weights():
        if bound is not None and w + ws > bound:
            continue
        cols = multiplication_map(R, s, w, ws)
        if rank(cols) != len(cols):
            return False
    return True


def _element_weight(algebra, s: Polynomial) -> int:
    ws = {algebra.weight(e) for e in s.terms}
    if len(ws) != 1:
        raise ValueError("the element must be a nonzero homogeneous polynomial")
    return ws.pop()


def default_nonzerodivisor(algebra: FinitelyPresentedAlgebra, bound: int | None = None) -> Polynomial:
    """Sum of the variables when homogeneous; else single variables, lowest weight first."""
    F = algebra.field
    cands = []
    total = sum(algebra.vars(), Polynomial(algebra.nvars, {}, F))
    if total and len({algebra.weight(e) for e in total.terms}) == 1:
        cands.append(total)
    order = sorted(range(algebra.nvars), key=lambda k: (algebra.weight(algebra.var(k).leading(algebra.order)[0]), k))
    cands.extend(algebra.var(k) for k in order)
    if algebra.is_zero_dimensional:
        cands.append(algebra.const(1))
    for s in cands:
        if is_nonzerodivisor(algebra, s, bound):
            return s
    raise ZeroDivisorError(f"no default nonzerodivisor found for {algebra.describe()}")


# ---------------------------------------------------------------------------
# torsion


@dataclass
class TorsionResult:
    module: PresentedModule
    s: Polynomial
    bound: object
    per_weight: dict  # w -> dim
    bases: dict  # w -> list of elements (lists of polynomials)
    certified: bool
    reducedness: str

    @property
    def total(self) -> int:
        return sum(self.per_weight.values())

    def witnesses(self) -> dict:
        return {w: [self.module.element_str(e) for e in els] for w, els in self.bases.items() if els}


def torsion_submodule(M: PresentedModule, s: Polynomial | None = None, bound: int | None = None,
                      require_reduced: bool = True) -> TorsionResult:
    """ker(M -> M[1/s]) as the union of (0 :_M s^k), per weight.

    For graded M the pieces of weight <= bound are computed; saturation uses
    module pieces up to the extended weight bound + k wt(s), and the result is
    marked certified when the kernel chain is stable over the last two steps.
    """
    A = M.algebra
    bound = M.bound if bound is None else bound
    how = certify_reduced(A, bound) if require_reduced else "not checked"
    if s is None:
        s = default_nonzerodivisor(A, bound)
    else:
        s = A.nf(s)
        if not is_nonzerodivisor(A, s, bound):
            raise ZeroDivisorError(f"{s.to_str(A.names)} is a zerodivisor in {A.describe()}")
    ws = _element_weight(A, s) if s else 0
    if M.graded and bound is not None:
        weights = [w for w in M.with_bound(bound).weights()]
    else:
        weights = M.weights()
    if ws == 0:
        k_max = max(1, max((M.piece(w).dim for w in weights), default=0)) + 1
        ext = M
    else:
        k_max = 2 + max(1, (bound or 0) // ws)
        ext = M.with_bound((bound or 0) + (k_max + 1) * ws)
    per, bases = {}, {}
    certified = True
    for w in weights:
        P = ext.piece(w)
        n = P.dim
        if n == 0:
            per[w], bases[w] = 0, []
            continue
        current = [{i: A.field.one} for i in range(n)]  # images of the basis under s^k
        dims = []
        kernel_vecs = []
        for k in range(1, k_max + 1):
            wk = w + (k - 1) * ws
            step = multiplication_map(ext, s, wk, ws)
            current = [apply(step, v) for v in current]
            _, ker = image_and_kernel(current)
            dims.append(len(ker))
            kernel_vecs = ker
            # no early exit: s moves elements to other weights, so a per-weight
            # plateau need not be final (a class may die only under s^4)
        stable = len(dims) >= 2 and dims[-1] == dims[-2]
        certified = certified and stable
        per[w] = dims[-1]
        bases[w] = [ext.lift(v, w) for v in kernel_vecs]
    return TorsionResult(M, s, bound, per, bases, certified, how)


# ---------------------------------------------------------------------------
# cdh forms on supported classes


@dataclass
class CdhForms:
    """Omega^p_cdh(R) with the comparison map from Omega^p_R, per weight."""

    algebra: FinitelyPresentedAlgebra
    p: int
    kind: str  # "artinian" or "curve"
    source: DifferentialModule
    target_dims: dict  # w -> dim Omega^p_cdh in weight w
    comparison: dict  # w -> columns (source basis -> target basis)
    target: PresentedModule | None = None
    semigroup: NumericalSemigroup | None = None
    bound: object = None

    def weights(self):
        return sorted(set(self.target_dims) | set(self.comparison))

    def kernel_dim(self, w=None) -> int:
        if w is None:
            return sum(self.kernel_dim(v) for v in self.weights())
        cols = self.comparison.get(w, [])
        return len(cols) - rank(cols)

    def cokernel_dim(self, w=None) -> int:
        if w is None:
            return sum(self.cokernel_dim(v) for v in self.weights())
        return self.target_dims.get(w, 0) - rank(self.comparison.get(w, []))

    def kernel_basis(self, w) -> list:
        """Kernel elements of Omega^p_R -> Omega^p_cdh in weight w."""
        cols = self.comparison.get(w, [])
        _, ker = image_and_kernel(cols)
        return [self.source.lift(v, w) for v in ker]


def ring_class(algebra: FinitelyPresentedAlgebra):
    """("artinian", None) or ("curve", S); raises UnsupportedRing otherwise."""
    if algebra.is_zero_dimensional:
        return "artinian", None
    S = recognize_semigroup_ring(algebra)
    if S is not None:
        return "curve", S
    raise UnsupportedRing(
        f"{algebra.describe()} is neither Artinian nor a numerical-semigroup ring; "
        "cdh forms are only available on those classes"
    )


def omega_cdh(algebra: FinitelyPresentedAlgebra, p: int, bound: int | None = None) -> CdhForms:
    kind, S = ring_class(algebra)
    if kind == "artinian":
        red = algebra.nilradical().reduced
        src = kaehler(algebra, p)
        tgt = kaehler(red, p)
        comp = {}
        for w in sorted(set(src.weights()) | set(tgt.weights())):
            if w in src.weights():
                comp[w] = induced_map(src, tgt, src.element_of, w)
            else:
                comp[w] = []
        tdims = {w: tgt.piece(w).dim for w in tgt.weights()}
        return CdhForms(algebra, p, kind, src, tdims, comp, tgt, None, None)
    if bound is None:
        raise TruncationError("curve cdh forms need a weight bound")
    src = kaehler(algebra, p, bound)
    a = list(algebra.weights)
    comp, tdims = {}, {}
    for w in range(bound + 1):
        if p == 0:
            tdims[w] = 1
        elif p == 1:
            tdims[w] = 1 if w >= 1 else 0
        else:
            tdims[w] = 0
        if w not in src.weights():
            comp[w] = []
            continue
        piece = src.piece(w)
        cols = []
        for pos in piece.quotient.free:
            i, k = piece.ambient[pos]
            if tdims[w] == 0:
                cols.append({})
            elif p == 0:
                cols.append({0: algebra.field.one})
            else:
                (j,) = src.index_sets[k]
                cols.append({0: algebra.field(a[j])})
        comp[w] = cols
    return CdhForms(algebra, p, kind, src, tdims, comp, None, S, bound)


# ---------------------------------------------------------------------------
# de Rham exactness of the kernel and cokernel complexes


@dataclass
class SequenceReport:
    name: str
    terms: list  # labels
    dims: dict  # (position, weight) -> dim of the term
    homology: dict  # (position, weight) -> dim of homology at that term
    bound: object

    @property
    def exact(self) -> bool:
        return all(v == 0 for v in self.homology.values())

    def nonzero(self) -> dict:
        return {k: v for k, v in self.homology.items() if v}


def _cdh_d(cdh_p: CdhForms, cdh_q: CdhForms, w) -> list:
    """d on cdh forms, Omega^p_cdh -> Omega^{p+1}_cdh in weight w, on target bases."""
    if cdh_p.kind == "curve":
        if cdh_p.p == 0 and cdh_q.target_dims.get(w, 0):
            # d(t^w) = w t^{w-1} dt
            return [{0: cdh_p.algebra.field(w)}] if cdh_p.target_dims.get(w, 0) else []
        return [{} for _ in range(cdh_p.target_dims.get(w, 0))]
    src, tgt = cdh_p.target, cdh_q.target
    if w not in src.weights():
        return []
    if w not in tgt.weights():
        return [{} for _ in range(src.piece(w).dim)]
    return induced_map(src, tgt, lambda pos: tgt.form(exterior_derivative(src, src.element_of(pos))), w)


def de_rham_exactness_suite(algebra: FinitelyPresentedAlgebra, bound: int | None = None) -> list:
    """Exactness of 0 -> nil -> tors Omega^1 -> ... and 0 -> R+/R -> Omega^1_cdh/Omega^1 -> ...

    "tors" here is the kernel of the comparison map to cdh forms (for reduced
    rings, the torsion submodule).  Both sequences are checked per weight
    within the truncation; the report lists the homology at every term.
    """
    if not algebra.graded or not algebra.is_homogeneous():
        raise ValueError("the de Rham sequences are checked on graded algebras only")
    kind, _ = ring_class(algebra)
    nd = algebra.nvars
    P = nd + 1
    cdh = [omega_cdh(algebra, p, bound) for p in range(P + 1)]
    drm = [de_rham_map(algebra, p, bound) for p in range(P)]
    weights = sorted(set().union(*[set(c.weights()) for c in cdh]))
    if bound is not None:
        weights = [w for w in weights if w <= bound]
    kern = {"dims": {}, "hom": {}}
    cok = {"dims": {}, "hom": {}}
    for w in weights:
        # kernel complex K^p = ker(Omega^p -> Omega^p_cdh), d restricted
        kbases = []
        for p in range(P + 1):
            cols = cdh[p].comparison.get(w, [])
            _, ker = image_and_kernel(cols)
            kbases.append(ker)
        for p in range(P + 1):
            K = kbases[p]
            out_rank = rank(apply(drm[p].matrices[w], v) for v in K) if p < P and w in drm[p].matrices and K else 0
            in_rank = rank(apply(drm[p - 1].matrices[w], v) for v in kbases[p - 1]) if p >= 1 and w in drm[p - 1].matrices and kbases[p - 1] else 0
            kern["dims"][(p, w)] = len(K)
            kern["hom"][(p, w)] = len(K) - out_rank - in_rank
        # cokernel complex Q^p = Omega^p_cdh / image, with induced d
        quots = []
        for p in range(P + 1):
            n = cdh[p].target_dims.get(w, 0)
            ech = Echelon().extend(cdh[p].comparison.get(w, []))
            quots.append((n, ech))
        dc = [_cdh_d(cdh[p], cdh[p + 1], w) for p in range(P)]
        for p in range(P + 1):
            n, ech = quots[p]
            qdim = n - ech.rank
            # rank of d: Q^p -> Q^{p+1} = rank(d(Omega_cdh^p) + im^{p+1}) - rank(im^{p+1})
            if p < P:
                n1, ech1 = quots[p + 1]
                e = Echelon().extend(ech1.basis())
                base = e.rank
                e.extend(dc[p])
                r_out = e.rank - base
            else:
                r_out = 0
            if p >= 1:
                e = Echelon().extend(ech.basis())
                base = e.rank
                e.extend(dc[p - 1])
                r_in = e.rank - base
            else:
                r_in = 0
            cok["dims"][(p, w)] = qdim
            cok["hom"][(p, w)] = qdim - r_out - r_in
    kname = ["nil(R)"] + [f"tors Omega^{p}" for p in range(1, P + 1)]
    cname = ["R+/R"] + [f"Omega^{p}_cdh/Omega^{p}" for p in range(1, P + 1)]
    return [
        SequenceReport("kernel sequence", kname, kern["dims"], kern["hom"], bound),
        SequenceReport("cokernel sequence", cname, cok["dims"], cok["hom"], bound),
    ]


def smooth_rank_check(n: int, p: int) -> int:
    return comb(n, p)
