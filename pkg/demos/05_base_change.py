"""Adjoining a transcendental u: HH and TK pick up a shifted copy through du."""

from nkcalc import QU, kunneth_base_change, parse_ring, tk_table_artinian

A = parse_ring("ring Q[x] / (x^2)")
k = kunneth_base_change(A, 3)
print("HH_n over Q(u), bar complex:", k.over_F)
print("HH_n absolute, via A[u]    :", k.absolute)
print("HH_n + HH_(n-1) du         :", k.predicted)

T = tk_table_artinian(A, (0, 3))
TF = tk_table_artinian(A.base_change(QU), (0, 3))
for n in range(4):
    print(f"TK_{n}: over Q {T.total(n)}, over Q(u) {TF.total(n)}")

twisted = parse_ring("ring Q(u)[x] / ((x - u)^2)")
print("twisted form (x - u)^2:", kunneth_base_change(twisted, 3).predicted)
