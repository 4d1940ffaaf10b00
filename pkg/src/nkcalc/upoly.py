"""Dense univariate polynomials over Q, coefficients stored low degree first.

A polynomial is a tuple of ``mpq`` with no trailing zeros; ``()`` is zero.
"""

from __future__ import annotations

from gmpy2 import mpq

ZERO: tuple = ()
ONE: tuple = (mpq(1),)


def trim(c) -> tuple:
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return tuple(mpq(x) for x in c)


def degree(p) -> int:
    return len(p) - 1


def add(p, q):
    n = max(len(p), len(q))
    return trim((p[k] if k < len(p) else 0) + (q[k] if k < len(q) else 0) for k in range(n))


def neg(p):
    return tuple(-c for c in p)


def sub(p, q):
    return add(p, neg(q))


def scale(p, c):
    if not c:
        return ZERO
    return tuple(c * x for x in p)


def mul(p, q):
    if not p or not q:
        return ZERO
    out = [mpq(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def divmod_(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    lead = q[-1]
    dq = len(q) - 1
    if len(r) <= dq:
        return ZERO, trim(r)
    quo = [mpq(0)] * (len(r) - dq)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k] / lead
        if c:
            quo[k - dq] = c
            for j in range(dq + 1):
                r[k - dq + j] -= c * q[j]
    return trim(quo), trim(r[:dq])


def monic(p):
    if not p:
        return p
    return scale(p, 1 / p[-1])


def gcd(p, q):
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def derivative(p):
    return trim(k * p[k] for k in range(1, len(p)))


def squarefree_part(p):
    """p / gcd(p, p'), made monic (characteristic zero)."""
    if degree(p) <= 0:
        return monic(p)
    return monic(divmod_(p, gcd(p, derivative(p)))[0])


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def to_str(p, var: str = "u") -> str:
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        if k == 0:
            mono = str(c)
        else:
            pw = var if k == 1 else f"{var}^{k}"
            if c == 1:
                mono = pw
            elif c == -1:
                mono = "-" + pw
            else:
                mono = f"{c}*{pw}"
        parts.append(mono)
    s = " + ".join(parts)
    return s.replace("+ -", "- ")
