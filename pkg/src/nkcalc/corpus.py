"""Named rings used by the CLI, the demos and the test suite."""

from __future__ import annotations

from .parsing import parse_ring
from .semigroup import NumericalSemigroup

BUILTINS = {
    "dual-numbers": "ring Q[x] / (x^2) weights x=1",
    "cusp": "ring Q[x,y] / (y^2 - x^3) weights x=2 y=3",
    "cross": "ring Q[x,y] / (x*y) weights x=1 y=1",
    "etale2": "ring Q[x] / (x^2 - 1)",
    "fat-point-3": "ring Q[x] / (x^3) weights x=1",
}

# Artinian rings the consistency suites run over.
ARTINIAN = {
    "dual-numbers": BUILTINS["dual-numbers"],
    "fat-point-3": BUILTINS["fat-point-3"],
    "square-of-maximal": "ring Q[x,y] / (x^2, x*y, y^2) weights x=1 y=1",
    "etale2": BUILTINS["etale2"],
}

GRADED = {
    "dual-numbers": BUILTINS["dual-numbers"],
    "fat-point-3": BUILTINS["fat-point-3"],
    "square-of-maximal": ARTINIAN["square-of-maximal"],
    "cusp": BUILTINS["cusp"],
}

SEMIGROUPS = {"cusp": (2, 3), "345": (3, 4, 5), "25": (2, 5), "line": (1,)}


def builtin(name: str):
    try:
        return parse_ring(BUILTINS[name])
    except KeyError:
        raise KeyError(f"unknown builtin {name!r}; available: {', '.join(BUILTINS)}") from None


def semigroup(gens) -> NumericalSemigroup:
    return NumericalSemigroup(tuple(gens))
