"""The ring description language.

    ring Q[x,y] / (y^2 - x^3) weights x=2 y=3
    ring Q(u)[x] / ((x - u)^2)

Weights are optional.  ``^`` is exponentiation, juxtaposition is not
multiplication, and division is only allowed by nonzero constants.
"""

from __future__ import annotations

import re

from .algebra import FinitelyPresentedAlgebra
from .fields import QQ, QU
from .polynomials import Polynomial


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        self.text = text
        pointer = text + "\n" + " " * pos + "^"
        super().__init__(f"{message} at position {pos}\n{pointer}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str, offset: int = 0):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start() or not m.group(0).strip():
            break
        num, name, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            toks.append(("num", int(num), start + offset))
        elif name is not None:
            toks.append(("name", name, start + offset))
        else:
            toks.append(("sym", sym, start + offset))
        pos = m.end()
    toks.append(("end", None, len(text) + offset))
    return toks


class _ExprParser:
    def __init__(self, text, tokens, names, field, u_name=None):
        self.text = text
        self.toks = tokens
        self.i = 0
        self.names = names
        self.field = field
        self.u_name = u_name
        self.n = len(names)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, sym):
        t = self.take()
        if t[0] != "sym" or t[1] != sym:
            raise ParseError(f"expected {sym!r}", self.text, t[2])
        return t

    def expr(self):
        t = self.peek()
        sign = 1
        if t[0] == "sym" and t[1] in "+-":
            self.take()
            sign = -1 if t[1] == "-" else 1
        acc = self.term() * sign
        while True:
            t = self.peek()
            if t[0] == "sym" and t[1] in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if t[1] == "+" else acc - rhs
            else:
                return acc

    def term(self):
        acc = self.power()
        while True:
            t = self.peek()
            if t[0] == "sym" and t[1] == "*":
                self.take()
                acc = acc * self.power()
            elif t[0] == "sym" and t[1] == "/":
                self.take()
                rhs = self.power()
                if rhs.total_degree() > 0 or not rhs:
                    raise ParseError("division only by nonzero constants", self.text, t[2])
                acc = acc * (1 / rhs.terms[(0,) * self.n])
            else:
                return acc

    def power(self):
        base = self.atom()
        t = self.peek()
        if t[0] == "sym" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "num":
                raise ParseError("expected a nonnegative integer exponent", self.text, e[2])
            return base ** e[1]
        return base

    def atom(self):
        t = self.take()
        if t[0] == "num":
            return Polynomial.constant(self.n, t[1], self.field)
        if t[0] == "name":
            if t[1] in self.names:
                return Polynomial.variable(self.n, self.names.index(t[1]), self.field)
            if self.u_name is not None and t[1] == self.u_name:
                return Polynomial.constant(self.n, self.field.gen, self.field)
            raise ParseError(f"unknown variable {t[1]!r}", self.text, t[2])
        if t[0] == "sym" and t[1] == "(":
            v = self.expr()
            self.expect(")")
            return v
        if t[0] == "sym" and t[1] == "-":
            return -self.atom()
        raise ParseError("unexpected token", self.text, t[2])


_HEAD = re.compile(r"\s*ring\s+Q(?:\(\s*([A-Za-z_]\w*)\s*\))?\s*\[\s*([^\]]*)\]\s*")


def parse_polynomial(text: str, names, field=QQ, u_name=None) -> Polynomial:
    toks = _tokenize(text)
    p = _ExprParser(text, toks, list(names), field, u_name)
    v = p.expr()
    t = p.peek()
    if t[0] != "end":
        raise ParseError("trailing input", text, t[2])
    return v


def parse_ring(text: str) -> FinitelyPresentedAlgebra:
    """Parse a ring description into a FinitelyPresentedAlgebra."""
    m = _HEAD.match(text)
    if not m:
        pos = len(text) - len(text.lstrip())
        raise ParseError("expected 'ring Q[...]' or 'ring Q(u)[...]'", text, pos)
    u_name = m.group(1)
    field = QU if u_name else QQ
    if u_name and u_name != QU.var:
        field = type(QU)(u_name)
    raw_names = [s.strip() for s in m.group(2).split(",") if s.strip()]
    if not raw_names:
        raise ParseError("no variables", text, m.start(2))
    for nm in raw_names:
        if not re.fullmatch(r"[A-Za-z_]\w*", nm):
            raise ParseError(f"bad variable name {nm!r}", text, text.find(nm, m.start(2)))
    if len(set(raw_names)) != len(raw_names) or (u_name and u_name in raw_names):
        raise ParseError("repeated variable name", text, m.start(2))
    pos = m.end()
    rest = text[pos:]
    gens = []
    weights = None
    toks = _tokenize(rest, pos)
    k = 0
    if toks[k][0] == "sym" and toks[k][1] == "/":
        k += 1
        if not (toks[k][0] == "sym" and toks[k][1] == "("):
            raise ParseError("expected '(' after '/'", text, toks[k][2])
        # find the matching close paren
        depth = 0
        j = k
        while True:
            t = toks[j]
            if t[0] == "end":
                raise ParseError("unbalanced parentheses", text, t[2])
            if t[0] == "sym" and t[1] == "(":
                depth += 1
            elif t[0] == "sym" and t[1] == ")":
                depth -= 1
                if depth == 0:
                    break
            j += 1
        inner = toks[k + 1 : j]
        # split on top-level commas
        parts, cur, depth = [], [], 0
        for t in inner:
            if t[0] == "sym" and t[1] == "(":
                depth += 1
            elif t[0] == "sym" and t[1] == ")":
                depth -= 1
            if t[0] == "sym" and t[1] == "," and depth == 0:
                parts.append(cur)
                cur = []
            else:
                cur.append(t)
        parts.append(cur)
        for part in parts:
            if not part:
                raise ParseError("empty ideal generator", text, toks[j][2])
            ep = _ExprParser(text, part + [("end", None, part[-1][2] + 1)], raw_names, field, u_name)
            g = ep.expr()
            if ep.peek()[0] != "end":
                raise ParseError("malformed ideal generator", text, ep.peek()[2])
            gens.append(g)
        k = j + 1
    if toks[k][0] == "name" and toks[k][1] == "weights":
        k += 1
        wmap = {}
        while toks[k][0] == "name":
            nm = toks[k]
            if nm[1] not in raw_names:
                raise ParseError(f"weight for unknown variable {nm[1]!r}", text, nm[2])
            if not (toks[k + 1][0] == "sym" and toks[k + 1][1] == "="):
                raise ParseError("expected '='", text, toks[k + 1][2])
            if toks[k + 2][0] != "num":
                raise ParseError("expected a nonnegative integer weight", text, toks[k + 2][2])
            wmap[nm[1]] = toks[k + 2][1]
            k += 3
            if toks[k][0] == "sym" and toks[k][1] == ",":
                k += 1
        missing = [n for n in raw_names if n not in wmap]
        if missing:
            raise ParseError(f"missing weight for {missing[0]!r}", text, toks[k][2])
        weights = [wmap[n] for n in raw_names]
    if toks[k][0] != "end":
        raise ParseError("unexpected trailing input", text, toks[k][2])
    return FinitelyPresentedAlgebra(raw_names, gens, weights, field=field, label=text.strip())
