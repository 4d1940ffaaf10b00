"""Sparse multivariate polynomials and monomial orders."""

from __future__ import annotations

from typing import Sequence

from .fields import QQ


class MonomialOrder:
    """A monomial order, realised as a sort key (larger key = larger monomial).

    ``kind`` is one of ``lex``, ``degrevlex`` or ``wdegrevlex`` (weights first,
    then degrevlex).  ``block`` > 0 gives an elimination order: the first
    ``block`` variables are compared lexicographically before anything else.
    """

    def __init__(self, kind: str = "degrevlex", weights: Sequence[int] | None = None, block: int = 0):
        if kind not in ("lex", "degrevlex", "wdegrevlex"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "wdegrevlex" and weights is None:
            raise ValueError("wdegrevlex needs weights")
        self.kind = kind
        self.weights = tuple(weights) if weights is not None else None
        self.block = block

    def key(self, e: tuple):
        if self.kind == "lex":
            return e
        rest = e[self.block:]
        tail = (sum(rest), tuple(-x for x in reversed(rest)))
        if self.kind == "wdegrevlex":
            w = self.weights[self.block:]
            tail = (sum(a * b for a, b in zip(w, rest)),) + tail
        if self.block:
            return (e[: self.block],) + tail
        return tail

    def __repr__(self):
        extra = f", weights={self.weights}" if self.weights else ""
        extra += f", block={self.block}" if self.block else ""
        return f"MonomialOrder({self.kind!r}{extra})"

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and (self.kind, self.weights, self.block) == (other.kind, other.weights, other.block)
        )

    def __hash__(self):
        return hash((self.kind, self.weights, self.block))


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: tuple, a: tuple) -> tuple:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_weight(e: tuple, weights: Sequence[int]) -> int:
    return sum(x * w for x, w in zip(e, weights))


class Polynomial:
    """Immutable polynomial: ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("nvars", "terms", "field")

    def __init__(self, nvars: int, terms: dict | None = None, field=QQ):
        self.nvars = nvars
        self.field = field
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                if c:
                    clean[tuple(e)] = field(c)
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms, field):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p.field = field
        return p

    @classmethod
    def constant(cls, nvars: int, c, field=QQ):
        return cls(nvars, {(0,) * nvars: c}, field)

    @classmethod
    def variable(cls, nvars: int, k: int, field=QQ):
        e = [0] * nvars
        e[k] = 1
        return cls(nvars, {tuple(e): 1}, field)

    @classmethod
    def monomial(cls, e: tuple, c=1, field=QQ):
        return cls(len(e), {tuple(e): c}, field)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different numbers of variables")
            return other
        return Polynomial.constant(self.nvars, other, self.field)

    def __add__(self, other):
        o = self._coerce(other)
        t = dict(self.terms)
        for e, c in o.terms.items():
            v = t.get(e)
            if v is None:
                t[e] = c
            else:
                v = v + c
                if v:
                    t[e] = v
                else:
                    del t[e]
        return Polynomial._raw(self.nvars, t, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.field(other)
            if not c:
                return Polynomial._raw(self.nvars, {}, self.field)
            return Polynomial._raw(self.nvars, {e: c * v for e, v in self.terms.items()}, self.field)
        o = self._coerce(other)
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e)
                t[e] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial._raw(self.nvars, {e: c for e, c in t.items() if c}, self.field)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.nvars, 1, self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_term(self, e: tuple, c) -> "Polynomial":
        return Polynomial._raw(
            self.nvars,
            {tuple(a + b for a, b in zip(m, e)): c * v for m, v in self.terms.items()},
            self.field,
        )

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        try:
            return self == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def leading(self, order: MonomialOrder):
        """(exponent, coefficient) of the leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        _, c = self.leading(order)
        return self * (1 / c)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def weights_of_terms(self, weights) -> set:
        return {mono_weight(e, weights) for e in self.terms}

    def is_homogeneous(self, weights) -> bool:
        return len(self.weights_of_terms(weights)) <= 1

    def diff(self, k: int) -> "Polynomial":
        """Partial derivative in variable k."""
        t: dict = {}
        for e, c in self.terms.items():
            if e[k]:
                f = list(e)
                f[k] -= 1
                t[tuple(f)] = c * e[k]
        return Polynomial._raw(self.nvars, t, self.field)

    def coefficient_derivative(self) -> "Polynomial":
        """Apply the field's derivation to every coefficient."""
        return Polynomial(self.nvars, {e: self.field.derivative(c) for e, c in self.terms.items()}, self.field)

    def evaluate(self, values):
        """Substitute ring elements (anything supporting + * **) for the variables."""
        acc = None
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term = term * (v ** k)
            acc = term if acc is None else acc + term
        return acc if acc is not None else 0

    def to_str(self, names: Sequence[str], order: MonomialOrder = DEGREVLEX) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                (n if k == 1 else f"{n}^{k}") for n, k in zip(names, e) if k
            )
            cs = str(c)
            if not mono:
                parts.append(cs if not cs.startswith("(") else cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                if " " in cs and not cs.startswith("("):
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        names = [f"x{k}" for k in range(self.nvars)]
        return f"Polynomial({self.to_str(names)})"
