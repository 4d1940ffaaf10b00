"""nkcalc: compute TK/NK tables, run verification suites, answer Bass-type queries.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or parse
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .corpus import BUILTINS, builtin
from .differentials import UnsupportedRing
from .nk import NKTable, bass_report, tk_table
from .parsing import ParseError, parse_ring
from .semigroup import NumericalSemigroup, SemigroupError
from .serialize import table_to_json
from .suites import SUITES, suite_cech


class UsageError(Exception):
    pass


def parse_n_range(text: str) -> tuple:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad n-range {text!r}; expected a..b or a single integer") from None
    if lo > hi:
        raise UsageError(f"empty n-range {text!r}")
    return lo, hi


def _semigroup(text: str) -> NumericalSemigroup:
    try:
        return NumericalSemigroup(tuple(int(x) for x in text.split(",") if x.strip()))
    except ValueError as e:
        raise UsageError(f"bad semigroup {text!r}: {e}") from None


def load_ring(args, required: bool = True):
    """The ring named by the positional argument, --builtin or --semigroup."""
    sources = [s for s in (args.ring, args.builtin, args.semigroup) if s]
    if len(sources) > 1:
        raise UsageError("give only one of RING, --builtin, --semigroup")
    if not sources:
        if required:
            raise UsageError("a ring is required (inline description, file path, --builtin or --semigroup)")
        return None
    if args.semigroup:
        return _semigroup(args.semigroup)
    if args.builtin:
        if args.builtin not in BUILTINS:
            raise UsageError(f"unknown builtin {args.builtin!r}; available: {', '.join(BUILTINS)}")
        return builtin(args.builtin)
    text = args.ring
    if not text.lstrip().startswith("ring") and os.path.isfile(text):
        with open(text) as fh:
            text = fh.read().strip()
    return parse_ring(text)


def render_table(table: NKTable) -> str:
    """Rows TK_n from the top of the range down, columns i = 1, 2, ...; cells past i = n + 2 are blank."""
    lo, hi = table.n_range
    imax = max(1, hi + 2)
    head = ["", *[f"i={i}" for i in range(1, imax + 1)], "total"]
    rows = []
    for n in range(hi, lo - 1, -1):
        cells = [f"TK_{n}"]
        for i in range(1, imax + 1):
            if i > max(1, n + 2):
                cells.append("")
                continue
            e = table.get(n, i)
            cells.append(str(e.dim if e else 0) + ("*" if e is not None and not e.exact and e.dim else ""))
        cells.append(str(table.total(n)))
        rows.append(cells)
    widths = [max(len(r[k]) for r in [head] + rows) for k in range(len(head))]
    fmt = lambda r: "  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip()
    out = [f"{table.ring}  (over {table.field})", fmt(head)] + [fmt(r) for r in rows]
    if table.weight_bound is not None:
        out.append(f"* read from ring weights <= {table.weight_bound}")
    return "\n".join(out)


def _weights_line(table: NKTable) -> list:
    lines = []
    for (n, i), e in sorted(table.entries.items()):
        if e.dim and e.per_weight:
            pw = ", ".join(f"w{w}:{d}" for w, d in sorted(e.per_weight.items()) if d)
            lines.append(f"TK_{n}^({i}) [{e.branch}] per weight: {pw}")
    return lines


def cmd_compute(args) -> int:
    ring = load_ring(args)
    table = tk_table(ring, parse_n_range(args.n), args.weight)
    if args.format == "json":
        print(table_to_json(table))
    else:
        print(render_table(table))
        for ln in _weights_line(table):
            print(ln)
    return 0


def cmd_verify(args) -> int:
    name = args.suite
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; available: {', '.join(SUITES)}")
    if name == "cech":
        src = args.builtin or (args.semigroup and _semigroup(args.semigroup)) or args.ring
        if isinstance(src, str) and src not in ("cross", "cusp", "line") and not src.lstrip().startswith("ring"):
            raise UsageError("cech accepts --builtin cross|cusp|line, --semigroup or a curve description")
        res = suite_cech(src, args.degree)
    elif name == "cartier":
        res = SUITES[name](N=args.N or 12, m_max=args.m)
    else:
        ring = load_ring(args, required=False)
        rings = None if ring is None else [ring]
        kw = {}
        if name in ("hodge", "sbi", "kunneth", "twopath") and args.N is not None:
            kw["N"] = args.N
        if name in ("hodge", "sbi") and args.weight is not None:
            kw["weight_bound"] = args.weight
        if name == "derham" and args.weight is not None:
            kw["bound"] = args.weight
        res = SUITES[name](rings, **kw)
    if args.format == "json":
        print(json.dumps(res.to_dict(), indent=2))
    else:
        print(res.render())
    return 0 if res.passed else 1


def cmd_report(args) -> int:
    ring = load_ring(args)
    lo, hi = parse_n_range(args.n)
    table = tk_table(ring, (min(lo - 1, hi - 1), hi), args.weight)
    verdicts = [bass_report(table, n) for n in range(lo, hi + 1)]
    if args.format == "json":
        print(table_to_json(table, verdicts))
    else:
        for v in verdicts:
            print(v.prose())
    return 0 if all(v.biconditional_holds for v in verdicts) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nkcalc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def ring_opts(sp):
        sp.add_argument("ring", nargs="?", help="ring description, e.g. 'ring Q[x]/(x^2)', or a file holding one")
        sp.add_argument("--builtin", help=f"named ring: {', '.join(BUILTINS)}")
        sp.add_argument("--semigroup", help="numerical semigroup generators, e.g. 2,3")
        sp.add_argument("--weight", type=int, default=None, help="weight bound for graded curves")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    c = sub.add_parser("compute", help="TK_n^(i) table")
    ring_opts(c)
    c.add_argument("--n", default="-1..3", help="range a..b of n")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help=f"one of {', '.join(SUITES)}")
    ring_opts(v)
    v.add_argument("--N", type=int, default=None, help="top degree (Hochschild degree, or truncation N for cartier)")
    v.add_argument("--degree", type=int, default=6, help="degree bound for the cech suite")
    v.add_argument("--m", type=int, default=4, help="largest m for the Cartier identities")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("report", help="Bass-question verdict")
    ring_opts(r)
    r.add_argument("--n", default="0", help="n or a range a..b")
    r.set_defaults(func=cmd_report)
    return p


def _glue_negative(argv: list) -> list:
    # argparse would read "--n -1..3" as two options
    out = []
    it = iter(argv)
    for a in it:
        if a == "--n":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--n={nxt}")
        else:
            out.append(a)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _glue_negative(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    if getattr(args, "weight", None) is None and args.verb in ("compute", "report"):
        args.weight = 12
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except (UsageError, SemigroupError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except UnsupportedRing as e:
        print(f"unsupported ring: {e}\nsupported classes: Artinian algebras over Q or Q(u), "
              "numerical-semigroup rings over Q", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
