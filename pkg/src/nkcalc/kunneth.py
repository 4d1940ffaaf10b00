"""Base change from Q to Q(u): Hochschild homology over the transcendental extension.

For F = Q(u) one has HH(F/Q) = Omega_{F/Q} = F + F du, so the Kunneth formula
predicts dim_F HH_n(A_F/Q) = dim HH_n(A) + dim HH_{n-1}(A).  Two independent
computations are compared with that count:

* the F-linear bar complex of A_F, run with rational-function arithmetic,
  gives HH(A_F/F); adding the du-shifted copy gives HH(A_F/Q);
* the Q-linear bar complex of A[u], split by u-weight.  HH commutes with
  localization, so the dimension in any positive u-weight is the F-rank of
  HH_n(A_F/Q).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FinitelyPresentedAlgebra
from .based import polynomial_extension
from .fields import QQ, QU
from .hochschild import HochschildComplex, _ungraded, as_based


class UnsupportedExtension(ValueError):
    pass


@dataclass
class KunnethCheck:
    algebra: str
    n_max: int
    over_F: list  # dim_F HH_n(A_F / F)
    absolute: list | None  # dim_F HH_n(A_F / Q) from u-weights of A[u]
    predicted: list  # HH_n(A) + HH_{n-1}(A), or the F-linear count shifted by du
    weight_profile: dict | None = None  # (n, j) -> dim in u-weight j

    @property
    def holds(self) -> bool:
        shifted = [self.over_F[n] + (self.over_F[n - 1] if n else 0) for n in range(self.n_max + 1)]
        if shifted != self.predicted:
            return False
        return self.absolute is None or self.absolute == self.predicted


def hh_over(algebra: FinitelyPresentedAlgebra, n_max: int) -> list:
    A = _ungraded(as_based(algebra))
    C = HochschildComplex(A, n_max + 1)
    return [C.hh_dim(n, 0) for n in range(n_max + 1)]


def kunneth_base_change(algebra: FinitelyPresentedAlgebra, n_max: int, weight_max: int = 3) -> KunnethCheck:
    """Compare both routes for HH_n(A tensor Q(u) / Q), n <= n_max."""
    if algebra.field is QQ:
        h = hh_over(algebra, n_max)
        AF = algebra.base_change(QU, label=f"{algebra.describe()} over Q(u)")
        f = hh_over(AF, n_max)
        predicted = [h[n] + (h[n - 1] if n else 0) for n in range(n_max + 1)]
        A = _ungraded(as_based(algebra))
        C = HochschildComplex(polynomial_extension(A, weight_max), n_max + 1)
        prof = {(n, j): C.hh_dim(n, j) for n in range(n_max + 1) for j in range(1, weight_max + 1)}
        absolute = []
        for n in range(n_max + 1):
            vals = {prof[(n, j)] for j in range(1, weight_max + 1)}
            absolute.append(vals.pop() if len(vals) == 1 else None)
        return KunnethCheck(algebra.describe(), n_max, f, absolute, predicted, prof)
    if isinstance(algebra.field, type(QU)):
        # no Q-form at hand: only the F-linear route is available
        f = hh_over(algebra, n_max)
        predicted = [f[n] + (f[n - 1] if n else 0) for n in range(n_max + 1)]
        return KunnethCheck(algebra.describe(), n_max, f, None, predicted)
    raise UnsupportedExtension("only Q and Q(u) coefficient fields are supported")
