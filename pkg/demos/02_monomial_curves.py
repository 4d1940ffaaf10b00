"""Monomial curves Q[t^a, t^b, ...]: gaps, torsion forms and the NK table.

TK_0 counts the gaps of the semigroup, TK_2^(2) is the torsion of the
module of Kähler 1-forms, and every TK_n with n < 0 vanishes.
"""

from nkcalc import NumericalSemigroup, bass_report, kaehler, semigroup_ring, tk_table_curve, torsion_submodule
from nkcalc.cli import render_table

for gens in [(2, 3), (2, 5), (3, 4, 5)]:
    S = NumericalSemigroup(gens)
    print(f"semigroup {S.label()}: gaps {list(S.gaps)}, Frobenius number {S.frobenius_number}")
    R = semigroup_ring(S)
    tors = torsion_submodule(kaehler(R, 1, 16), bound=16)
    for w, forms in sorted(tors.witnesses().items()):
        print(f"  torsion 1-form in weight {w}: {', '.join(forms)}")
    T = tk_table_curve(S, (-2, 3), 16)
    print(render_table(T))
    print(bass_report(T, 1).prose())
    print()
