"""The sequence 0 -> A -> B -> B (x)_A B for two singular curves.

For the node (coordinate cross) inside Q[X] x Q[Y] the sequence is exact.
For the cusp inside Q[t] the equalizer is still A, but t is a witness that
the cusp is not seminormal: t^2 and t^3 lie in A while t does not.
"""

from nkcalc import cech_exactness
from nkcalc.cech import cross_extension, cusp_extension

for label, pair in [("cross", cross_extension()), ("cusp", cusp_extension())]:
    rep = cech_exactness(*pair, 6)
    print(f"{label}: exact = {rep.exact}, witnesses b with b^2, b^3 in A: {rep.traverso_witnesses}")
    for d in rep.degrees:
        print(f"  degree {d.degree}: A {d.dim_A}  B {d.dim_B}  B(x)B {d.dim_BB}  equalizer {d.dim_equalizer}")
