"""Exact coefficient fields: the rationals and Q(u).

Elements of ``QQ`` are ``gmpy2.mpq``.  Elements of ``QU`` are
:class:`RationalFunction`, a reduced fraction of univariate polynomials in u
with monic denominator.  Both support the ordinary arithmetic operators and
``bool(x)`` is false exactly for zero, which is all the linear algebra needs.
"""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq

from . import upoly


class RationalField:
    name = "QQ"
    has_derivation = False

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)

    def __call__(self, x):
        if isinstance(x, RationalFunction):
            if x.den != upoly.ONE or len(x.num) > 1:
                raise ValueError(f"{x} is not a rational number")
            return x.num[0] if x.num else mpq(0)
        if isinstance(x, Fraction):
            return mpq(x.numerator, x.denominator)
        return mpq(x)

    def derivative(self, c):
        return self.zero

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class RationalFunction:
    """num/den with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=upoly.ONE, _reduced=False):
        if not _reduced:
            num = upoly.trim(num)
            den = upoly.trim(den)
            if not den:
                raise ZeroDivisionError("rational function with zero denominator")
            if not num:
                den = upoly.ONE
            else:
                g = upoly.gcd(num, den)
                if len(g) > 1:
                    num = upoly.divmod_(num, g)[0]
                    den = upoly.divmod_(den, g)[0]
                lead = den[-1]
                if lead != 1:
                    num = upoly.scale(num, 1 / lead)
                    den = upoly.scale(den, 1 / lead)
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def _coerce(x):
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, Fraction):
            x = mpq(x.numerator, x.denominator)
        return RationalFunction(upoly.trim((mpq(x),)), upoly.ONE, _reduced=True)

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            return RationalFunction(upoly.add(self.num, o.num), self.den)
        return RationalFunction(
            upoly.add(upoly.mul(self.num, o.den), upoly.mul(o.num, self.den)),
            upoly.mul(self.den, o.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(upoly.neg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if not self.num or not o.num:
            return RationalFunction(upoly.ZERO, upoly.ONE, _reduced=True)
        return RationalFunction(upoly.mul(self.num, o.num), upoly.mul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self._coerce(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            if self.den == upoly.ONE and len(self.num) <= 1:
                self._hash = hash(self.num[0] if self.num else mpq(0))
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def derivative(self):
        # (n/d)' = (n'd - nd') / d^2
        top = upoly.sub(
            upoly.mul(upoly.derivative(self.num), self.den),
            upoly.mul(self.num, upoly.derivative(self.den)),
        )
        return RationalFunction(top, upoly.mul(self.den, self.den))

    def __repr__(self):
        n = upoly.to_str(self.num)
        if self.den == upoly.ONE:
            return n
        return f"({n})/({upoly.to_str(self.den)})"


class RationalFunctionField:
    """Q(u): one transcendental u over the rationals, with d/du."""

    name = "QQ(u)"
    has_derivation = True

    def __init__(self, var: str = "u"):
        self.var = var
        self.zero = RationalFunction(upoly.ZERO, upoly.ONE, _reduced=True)
        self.one = RationalFunction(upoly.ONE, upoly.ONE, _reduced=True)
        self.gen = RationalFunction((mpq(0), mpq(1)), upoly.ONE, _reduced=True)

    def __call__(self, x):
        return RationalFunction._coerce(x)

    def derivative(self, c):
        return self(c).derivative()

    def __repr__(self):
        return f"QQ({self.var})"

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.var == self.var

    def __hash__(self):
        return hash(("QQ(u)", self.var))


QQ = RationalField()
QU = RationalFunctionField()
