"""Typical pieces of NK for a few Artinian algebras, computed two ways.

The table comes from Hochschild homology (Hodge pieces) plus the comparison
of Kähler forms with forms on the reduced quotient.  The totals are then
compared with the homology of the relative Hochschild complex for the
nilradical, a completely separate route.
"""

from nkcalc import parse_ring, tk_table_artinian, two_path_check
from nkcalc.cli import render_table

RINGS = [
    "ring Q[x] / (x^2)",
    "ring Q[x] / (x^3)",
    "ring Q[x,y] / (x^2, x*y, y^2)",
    "ring Q[x] / (x^2 - 1)",
]

for text in RINGS:
    A = parse_ring(text)
    print(render_table(tk_table_artinian(A, (-1, 4))))
    paths = two_path_check(A, 4)
    print("  assembled totals :", [paths[n][0] for n in sorted(paths)])
    print("  relative HH      :", [paths[n][1] for n in sorted(paths)])
    print()
