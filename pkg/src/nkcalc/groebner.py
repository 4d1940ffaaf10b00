"""Buchberger's algorithm with the normal pair-selection strategy.

Only what the rest of the package needs: reduced Groebner bases and full
normal forms over an exact field.
"""

from __future__ import annotations

from .polynomials import (
    MonomialOrder,
    Polynomial,
    mono_div,
    mono_divides,
    mono_lcm,
)


def _reduce_terms(terms: dict, basis: list, order: MonomialOrder, field, nvars: int) -> dict:
    """Fully reduce a term dict against ``basis`` = [(lm, lc, poly)]."""
    key = order.key
    p = dict(terms)
    out: dict = {}
    while p:
        e = max(p, key=key)
        c = p[e]
        for lm, lc, g in basis:
            if mono_divides(lm, e):
                q = mono_div(e, lm)
                f = c / lc
                for m, v in g.terms.items():
                    t = tuple(a + b for a, b in zip(m, q))
                    w = p.get(t)
                    if w is None:
                        p[t] = -f * v
                    else:
                        w = w - f * v
                        if w:
                            p[t] = w
                        else:
                            del p[t]
                break
        else:
            out[e] = c
            del p[e]
    return out


def normal_form(p: Polynomial, basis, order: MonomialOrder) -> Polynomial:
    """Remainder of p under full reduction by ``basis`` (a list of polynomials)."""
    prepared = [(*g.leading(order), g) for g in basis if g]
    return Polynomial._raw(p.nvars, _reduce_terms(p.terms, prepared, order, p.field, p.nvars), p.field)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    ef, cf = f.leading(order)
    eg, cg = g.leading(order)
    lcm = mono_lcm(ef, eg)
    return f.mul_term(mono_div(lcm, ef), 1 / cf) - g.mul_term(mono_div(lcm, eg), 1 / cg)


def groebner_basis(generators, order: MonomialOrder) -> list:
    """Reduced Groebner basis of the ideal generated by ``generators``.

    The result is monic, inter-reduced and sorted by decreasing leading
    monomial.  Zero generators are dropped; an empty list means the zero ideal.
    """
    gens = [g for g in generators if g]
    if not gens:
        return []
    nvars = gens[0].nvars
    field = gens[0].field
    if any(g.nvars != nvars for g in gens):
        raise ValueError("generators have inconsistent variable counts")
    key = order.key

    basis: list = []  # (lm, lc, poly)
    pairs: set = set()

    def add(poly):
        lm, lc = poly.leading(order)
        poly = poly * (1 / lc)
        idx = len(basis)
        basis.append((lm, field.one, poly))
        for j in range(idx):
            if basis[j] is not None:
                pairs.add((j, idx))
        return idx

    for g in gens:
        r = Polynomial._raw(nvars, _reduce_terms(g.terms, [b for b in basis if b], order, field, nvars), field)
        if r:
            add(r)

    while pairs:
        i, j = min(pairs, key=lambda ij: (key(mono_lcm(basis[ij[0]][0], basis[ij[1]][0])), ij))
        pairs.discard((i, j))
        lmi, lmj = basis[i][0], basis[j][0]
        lcm = mono_lcm(lmi, lmj)
        # product criterion
        if all(a == 0 or b == 0 for a, b in zip(lmi, lmj)):
            continue
        # chain criterion
        skip = False
        for k, b in enumerate(basis):
            if k in (i, j):
                continue
            if mono_divides(b[0], lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pairs and pjk not in pairs:
                    skip = True
                    break
        if skip:
            continue
        s = s_polynomial(basis[i][2], basis[j][2], order)
        r = Polynomial._raw(nvars, _reduce_terms(s.terms, basis, order, field, nvars), field)
        if r:
            add(r)

    polys = [b[2] for b in basis]
    return _interreduce(polys, order)


def _interreduce(polys: list, order: MonomialOrder) -> list:
    lms = [p.leading(order)[0] for p in polys]
    keep = []
    for k, p in enumerate(polys):
        redundant = False
        for j, q in enumerate(polys):
            if j == k:
                continue
            if mono_divides(lms[j], lms[k]) and (lms[j] != lms[k] or j < k):
                redundant = True
                break
        if not redundant:
            keep.append(p)
    out = []
    for k, p in enumerate(keep):
        others = [q for j, q in enumerate(keep) if j != k]
        r = normal_form(p, others, order)
        out.append(r.monic(order))
    out.sort(key=lambda p: order.key(p.leading(order)[0]), reverse=True)
    return out


def is_groebner(basis: list, order: MonomialOrder) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if normal_form(s_polynomial(basis[i], basis[j], order), basis, order):
                return False
    return True
