"""Typical pieces TK_n^(i), NK tables, N^p bookkeeping and Bass-question verdicts.

For a commutative Q-algebra R the typical pieces are

* TK_n^(i) = HH_{n-1}^(i-1)(R) for i < n,
* TK_n^(i) = H^{i-n-1}_cdh(R, Omega^{i-1}) for i >= n + 2 (zero on the
  supported classes),
* for i = n, n + 1 the four-term sequence
  0 -> TK_{n+1}^(n+1) -> Omega^n_R -> Omega^n_cdh(R) -> TK_n^(n+1) -> 0,

and NK_n^(i) = TK_n^(i) (x) tQ[t].  Entries with i <= 0 vanish and are not
stored.  Supported rings: Artinian algebras over Q or Q(u) and
numerical-semigroup curves over Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .algebra import FinitelyPresentedAlgebra
from .differentials import UnsupportedRing, omega_cdh, ring_class
from .fields import QQ
from .hochschild import HochschildComplex, _ungraded, as_based, hodge_decompose, relative_hh
from .semigroup import NumericalSemigroup, recognize_semigroup_ring, semigroup_ring

HH_BRANCH = "HH"
SEQUENCE_BRANCH = "exact-sequence"
VANISHING_BRANCH = "cdh-vanishing"


class MissingEntries(KeyError):
    pass


@dataclass
class TypicalPiece:
    """TK_n^(i): its dimension, how it was obtained, and how far it is certified.

    ``per_weight`` (curves only) splits the dimension by the ring's own
    grading; ``certified_to`` is None for exact values and the weight bound
    for values read off a truncation.
    """

    n: int
    i: int
    dim: int
    branch: str
    certified_to: int | None = None
    per_weight: dict | None = None
    witnesses: list = field(default_factory=list)
    note: str = ""

    @property
    def exact(self) -> bool:
        return self.certified_to is None

    def to_dict(self) -> dict:
        d = {"n": self.n, "i": self.i, "dim": self.dim, "branch": self.branch,
             "certified_to": self.certified_to}
        if self.per_weight is not None:
            d["per_weight"] = {str(w): v for w, v in sorted(self.per_weight.items())}
        if self.witnesses:
            d["witnesses"] = list(self.witnesses)
        if self.note:
            d["note"] = self.note
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "TypicalPiece":
        pw = d.get("per_weight")
        return cls(d["n"], d["i"], d["dim"], d["branch"], d.get("certified_to"),
                   {int(w): v for w, v in pw.items()} if pw is not None else None,
                   list(d.get("witnesses", [])), d.get("note", ""))


@dataclass
class NKTable:
    ring: str
    kind: str  # "artinian" or "curve"
    n_range: tuple
    entries: dict  # (n, i) -> TypicalPiece
    field: str = "Q"
    weight_bound: int | None = None

    def get(self, n: int, i: int) -> TypicalPiece | None:
        return self.entries.get((n, i))

    def dim(self, n: int, i: int) -> int:
        if i <= 0:
            return 0
        e = self.entries.get((n, i))
        if e is None:
            if not self.covers(n):
                raise MissingEntries(f"TK_{n} is outside the table range {self.n_range}")
            return 0
        return e.dim

    def covers(self, n: int) -> bool:
        return self.n_range[0] <= n <= self.n_range[1]

    def total(self, n: int) -> int:
        """dim TK_n = sum over i (equal to dim NK_n in every positive t-weight)."""
        if not self.covers(n):
            raise MissingEntries(f"TK_{n} is outside the table range {self.n_range}")
        return sum(e.dim for (m, _), e in self.entries.items() if m == n)

    def certified(self, n: int) -> int | None:
        """None when every entry of TK_n is exact, else the weakest truncation bound."""
        bounds = [e.certified_to for (m, _), e in self.entries.items() if m == n and e.certified_to is not None]
        return min(bounds) if bounds else None

    def nk_series(self, n: int, W: int) -> list:
        """dim NK_n in t-weights 0..W (weight 0 is always 0)."""
        t = self.total(n)
        return [0] + [t] * W

    def i_values(self, n: int) -> list:
        return sorted(i for (m, i) in self.entries if m == n)

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "kind": self.kind,
            "field": self.field,
            "n_range": list(self.n_range),
            "weight_bound": self.weight_bound,
            "entries": [self.entries[k].to_dict() for k in sorted(self.entries)],
            "totals": {str(n): self.total(n) for n in range(self.n_range[0], self.n_range[1] + 1)},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "NKTable":
        entries = {}
        for e in d["entries"]:
            tp = TypicalPiece.from_dict(e)
            entries[(tp.n, tp.i)] = tp
        return cls(d["ring"], d["kind"], tuple(d["n_range"]), entries, d.get("field", "Q"), d.get("weight_bound"))


def _parse_range(n_range) -> tuple:
    a, b = n_range
    if a > b:
        raise ValueError(f"empty n-range {a}..{b}")
    return int(a), int(b)


def _i_range(n: int) -> range:
    return range(1, max(1, n + 2) + 1)


# ---------------------------------------------------------------------------
# Artinian algebras


def tk_table_artinian(algebra: FinitelyPresentedAlgebra, n_range) -> NKTable:
    a, b = _parse_range(n_range)
    if not algebra.is_zero_dimensional:
        raise UnsupportedRing(f"{algebra.describe()} is not Artinian")
    over_F = algebra.field is not QQ
    top_hh = max(b - 1, 0)
    A = _ungraded(as_based(algebra))
    H = hodge_decompose(HochschildComplex(A, top_hh + 1), range(top_hh + 1), weights=[0])

    def h(m, i):
        if m < 0 or i < 0 or i > m:
            return 0
        return H.dim(m, i, 0)

    def hh_piece(m, i):
        # over Q(u): Kunneth with Omega_{F/Q} = F + F du (du in Hodge weight 1)
        return h(m, i) + (h(m - 1, i - 1) if over_F else 0)

    cdh = {}

    def forms(p):
        if p not in cdh:
            cdh[p] = omega_cdh(algebra, p)
        return cdh[p]

    entries = {}
    for n in range(a, b + 1):
        for i in _i_range(n):
            if i < n:
                d = hh_piece(n - 1, i - 1)
                note = "HH over Q(u) plus its du-shift" if over_F else ""
                entries[(n, i)] = TypicalPiece(n, i, d, HH_BRANCH, note=note)
            elif i == n:
                c = forms(n - 1)
                wit = []
                for w in c.weights():
                    wit += [c.source.element_str(e) for e in c.kernel_basis(w)]
                entries[(n, i)] = TypicalPiece(n, i, c.kernel_dim(), SEQUENCE_BRANCH, witnesses=wit,
                                               note=f"ker(Omega^{n - 1} -> Omega^{n - 1}(R_red))")
            elif i == n + 1:
                c = forms(n)
                entries[(n, i)] = TypicalPiece(n, i, c.cokernel_dim(), SEQUENCE_BRANCH,
                                               note=f"coker(Omega^{n} -> Omega^{n}(R_red))")
            else:
                entries[(n, i)] = TypicalPiece(n, i, 0, VANISHING_BRANCH,
                                               note="higher cdh cohomology vanishes on Artinian rings")
    fname = "Q" if not over_F else f"Q({algebra.field.var})"
    return NKTable(algebra.describe(), "artinian", (a, b), entries, fname, None)


# ---------------------------------------------------------------------------
# numerical-semigroup curves


def _as_curve(ring):
    if isinstance(ring, NumericalSemigroup):
        return semigroup_ring(ring), ring
    if isinstance(ring, (tuple, list)):
        S = NumericalSemigroup(ring)
        return semigroup_ring(S), S
    S = recognize_semigroup_ring(ring)
    if S is None:
        raise UnsupportedRing(f"{ring.describe()} is not a numerical-semigroup ring")
    return ring, S


def tk_table_curve(ring, n_range, weight_bound: int = 12) -> NKTable:
    """TK table of Q[S]; entries read from a truncation carry ``certified_to = weight_bound``."""
    a, b = _parse_range(n_range)
    R, S = _as_curve(ring)
    W = weight_bound
    if W < S.conductor:
        raise ValueError(f"weight bound {W} is below the conductor {S.conductor}")
    cdh = {}

    def forms(p):
        if p not in cdh:
            cdh[p] = omega_cdh(R, p, W)
        return cdh[p]

    top_hh = max(b - 1, 0)
    C = HochschildComplex(R.based(W), top_hh + 1)
    hodge_cache = {}

    def hh_weights(m, i):
        if (m, i) not in hodge_cache:
            hodge_cache[(m, i)] = {w: C.hodge_dim(m, i, w) for w in range(W + 1)}
        return hodge_cache[(m, i)]

    entries = {}
    for n in range(a, b + 1):
        for i in _i_range(n):
            if n < 0 or (n == 0 and i >= 2) or i >= n + 2:
                entries[(n, i)] = TypicalPiece(n, i, 0, VANISHING_BRANCH,
                                               note="cdh cohomology of a curve vanishes here")
            elif i < n:
                pw = hh_weights(n - 1, i - 1) if i - 1 <= n - 1 else {}
                pw = {w: d for w, d in pw.items() if d}
                entries[(n, i)] = TypicalPiece(n, i, sum(pw.values()), HH_BRANCH, W, pw)
            elif i == n:
                c = forms(n - 1)
                pw = {w: c.kernel_dim(w) for w in c.weights() if c.kernel_dim(w)}
                wit = []
                for w in sorted(pw):
                    wit += [c.source.element_str(e) for e in c.kernel_basis(w)]
                entries[(n, i)] = TypicalPiece(n, i, sum(pw.values()), SEQUENCE_BRANCH, W, pw, wit,
                                               note=f"ker(Omega^{n - 1} -> Omega^{n - 1}_cdh)")
            else:  # i == n + 1
                c = forms(n)
                pw = {w: c.cokernel_dim(w) for w in c.weights() if c.cokernel_dim(w)}
                wit = []
                if n == 0:
                    wit = [f"t^{w}" for w in sorted(pw)]
                elif n == 1:
                    wit = [f"t^{w - 1}*dt" if w > 1 else "dt" for w in sorted(pw)]
                entries[(n, i)] = TypicalPiece(n, i, sum(pw.values()), SEQUENCE_BRANCH, W, pw, wit,
                                               note=f"coker(Omega^{n} -> Omega^{n}_cdh)")
    return NKTable(f"Q[t^a : a in {S.label()}]", "curve", (a, b), entries, "Q", W)


def tk_table(ring, n_range, weight_bound: int = 12) -> NKTable:
    """Dispatch on the ring class."""
    if isinstance(ring, (NumericalSemigroup, tuple, list)):
        return tk_table_curve(ring, n_range, weight_bound)
    kind, S = ring_class(ring)
    if kind == "artinian":
        return tk_table_artinian(ring, n_range)
    return tk_table_curve(ring, n_range, weight_bound)


# ---------------------------------------------------------------------------
# N^p K bookkeeping


def _series_mul(a: list, b: list, W: int) -> list:
    out = [0] * (W + 1)
    for i, x in enumerate(a[: W + 1]):
        if x:
            for j, y in enumerate(b[: W + 1 - i]):
                out[i + j] += x * y
    return out


@dataclass
class NpResult:
    p: int
    n: int
    series: list  # dim N^pK_n in total t-weight 0..W
    contributions: dict  # j -> series of the NK_{n-j} summand
    certified_to: int | None

    @property
    def zero(self) -> bool:
        return not any(self.series)


def np_decomposition(source, p: int, n: int, W: int = 8) -> NpResult:
    """dim N^pK_n per total t-weight.

    N^pK_n = sum_j NK_{n-j} (x) wedge^j Q^{p-1} (x) (tQ[t])^{p-1-j} (x) (Omega^1_{Q[t]})^j,
    with t^k dt in weight k + 1, so both tQ[t] and Omega^1_{Q[t]} have series
    z/(1-z).  ``source`` is an NKTable or a dict q -> list of NK_q weight dims
    (index = t-weight, starting at 0).
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    line = [0] + [1] * W
    certified = None
    nk = {}
    for j in range(p):
        q = n - j
        if isinstance(source, NKTable):
            if not source.covers(q):
                raise MissingEntries(f"N^{p}K_{n} needs NK_{q}, outside the table range {source.n_range}")
            nk[q] = source.nk_series(q, W)
            c = source.certified(q)
            if c is not None:
                certified = c if certified is None else min(certified, c)
        else:
            if q not in source:
                raise MissingEntries(f"N^{p}K_{n} needs NK_{q}")
            s = list(source[q])[: W + 1]
            nk[q] = s + [0] * (W + 1 - len(s))
    shift = [1] + [0] * W
    for _ in range(p - 1):
        shift = _series_mul(shift, line, W)
    total = [0] * (W + 1)
    contrib = {}
    for j in range(p):
        s = [comb(p - 1, j) * x for x in _series_mul(nk[n - j], shift, W)]
        contrib[j] = s
        total = [x + y for x, y in zip(total, s)]
    return NpResult(p, n, total, contrib, certified)


@dataclass
class BassVerdict:
    ring: str
    n: int
    nk_n_zero: bool
    nk_prev_zero: bool
    n2k_zero: bool
    k_regular: bool
    regular_range: tuple
    biconditional_holds: bool
    certified_to: int | None
    warnings: list
    dims: dict = field(default_factory=dict)  # q -> dim TK_q, for q in {n-1, n} when known

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "n": self.n,
            "NK_n_zero": self.nk_n_zero,
            "NK_n-1_zero": self.nk_prev_zero,
            "N2K_n_zero": self.n2k_zero,
            "K_n_regular": self.k_regular,
            "regular_range": list(self.regular_range),
            "biconditional_holds": self.biconditional_holds,
            "certified_to": self.certified_to,
            "warnings": list(self.warnings),
            "tk_dims": {str(q): d for q, d in sorted(self.dims.items())},
        }

    def prose(self) -> str:
        n = self.n

        def z(b):
            return "= 0" if b else "!= 0"

        lines = [
            f"{self.ring}, n = {n}:",
            f"  NK_{n} {z(self.nk_n_zero)}, NK_{n - 1} {z(self.nk_prev_zero)}, N^2K_{n} {z(self.n2k_zero)}",
        ]
        if self.dims:
            shown = ", ".join(f"dim TK_{q} = {d}" for q, d in sorted(self.dims.items(), reverse=True))
            lines.append(f"  {shown} (NK_q has dimension dim TK_q in every t-weight)")
        if self.biconditional_holds:
            lines.append(f"  N^2K_{n} = 0 <=> (NK_{n} = 0 and NK_{n - 1} = 0): consistent")
        else:
            lines.append(f"  N^2K_{n} = 0 <=> (NK_{n} = 0 and NK_{n - 1} = 0): VIOLATED")
        lo, hi = self.regular_range
        if self.k_regular:
            lines.append(f"  K_{n}-regular: NK_q = 0 for {lo} <= q <= {n} (and below by the vanishing results)")
        else:
            bad = "NK_" + str(n) if not self.nk_n_zero else "some NK_q with q < n"
            lines.append(f"  not K_{n}-regular: {bad} is nonzero")
        if self.certified_to is not None:
            lines.append(f"  (dimensions read from a truncation at weight {self.certified_to})")
        lines += [f"  warning: {w}" for w in self.warnings]
        return "\n".join(lines)


def bass_report(table: NKTable, n: int, W: int = 6) -> BassVerdict:
    warnings = []
    nk_n = table.total(n) == 0
    if table.covers(n - 1):
        nk_prev = table.total(n - 1) == 0
    else:
        warnings.append(f"NK_{n - 1} outside the table range; taken from the vanishing results")
        nk_prev = _known_vanishing(table, n - 1)
    if table.covers(n - 1):
        n2 = np_decomposition(table, 2, n, W)
    else:
        n2 = np_decomposition({n: table.nk_series(n, W), n - 1: [0] * (W + 1) if nk_prev else [0] + [1] * W}, 2, n, W)
    lo = table.n_range[0]
    lower = [q for q in range(lo, n + 1)]
    k_reg = all(table.total(q) == 0 for q in lower)
    if not _known_vanishing(table, lo - 1):
        warnings.append(f"K-regularity checked only for q >= {lo}")
    cert = table.certified(n)
    c2 = table.certified(n - 1) if table.covers(n - 1) else None
    if c2 is not None:
        cert = c2 if cert is None else min(cert, c2)
    bic = n2.zero == (nk_n and nk_prev)
    dims = {q: table.total(q) for q in (n - 1, n) if table.covers(q)}
    return BassVerdict(table.ring, n, nk_n, nk_prev, n2.zero, k_reg, (lo, n), bic, cert, warnings, dims)


def _known_vanishing(table: NKTable, q: int) -> bool:
    """NK_q = 0 below the table: both supported classes have NK_q = 0 for q < 0."""
    return q < 0


def biconditional_on_table(table: NKTable, W: int = 6) -> dict:
    """Check N^2K_n = 0 <=> NK_n = NK_{n-1} = 0 for every n in range."""
    out = {}
    for n in range(table.n_range[0], table.n_range[1] + 1):
        out[n] = bass_report(table, n, W).biconditional_holds
    return out


# ---------------------------------------------------------------------------
# cross-checks


def two_path_check(algebra: FinitelyPresentedAlgebra, n_max: int) -> dict:
    """n -> (sum_i dim TK_n^(i), dim HH_{n-1}(A, nil A)) for 0 <= n <= n_max."""
    table = tk_table_artinian(algebra, (0, n_max))
    nil = algebra.nilradical()
    rel = relative_hh(algebra, nil.generators, max(n_max - 1, 0)) if nil.generators else None
    out = {}
    for n in range(0, n_max + 1):
        if n == 0:
            rhs = 0
        else:
            rhs = rel.dim(n - 1) if rel is not None else 0
        out[n] = (table.total(n), rhs)
    return out


@dataclass
class FiberCohomology:
    ring: str
    dims: dict  # m -> dim H^m F_HH (within the table)
    hodge: dict  # (m, i) -> dim H^m F_HH^(i)
    checks: dict = field(default_factory=dict)


def fiber_cohomology(table: NKTable, algebra: FinitelyPresentedAlgebra | None = None) -> FiberCohomology:
    """H^m F_HH with H^m F_HH^(i-1) = TK_{1-m}^(i), read off the table.

    For Artinian rings with the algebra supplied, H^{-n} F_HH is compared with
    HH_n(R) for n >= 1.
    """
    dims, hodge = {}, {}
    for n in range(table.n_range[0], table.n_range[1] + 1):
        m = 1 - n
        dims[m] = table.total(n)
        for i in table.i_values(n):
            hodge[(m, i - 1)] = table.dim(n, i)
    checks = {}
    if algebra is not None and table.kind == "artinian":
        ns = [n for n in range(1, table.n_range[1]) if table.covers(n + 1)]
        if ns:
            A = _ungraded(as_based(algebra))
            C = HochschildComplex(A, max(ns) + 1)
            for n in ns:
                checks[n] = (dims[-n], C.hh_dim(n, 0))
    return FiberCohomology(table.ring, dims, hodge, checks)


def kunneth_tk_check(algebra: FinitelyPresentedAlgebra, n_range) -> dict:
    """(n, i) -> (TK over Q(u), TK_n^(i) + TK_{n-1}^(i-1) over Q)."""
    from .fields import QU

    a, b = _parse_range(n_range)
    T = tk_table_artinian(algebra, (a - 1, b))
    TF = tk_table_artinian(algebra.base_change(QU, label=f"{algebra.describe()} (x) Q(u)"), (a, b))
    out = {}
    for (n, i), e in TF.entries.items():
        pred = T.dim(n, i) + (T.dim(n - 1, i - 1) if i - 1 >= 1 else 0)
        out[(n, i)] = (e.dim, pred)
    return out
