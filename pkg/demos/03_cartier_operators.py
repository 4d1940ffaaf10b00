"""Homotheties, Verschiebung and Frobenius on tQ[t] and on HH (x) tQ[t]."""

from gmpy2 import mpq

from nkcalc import check_relations, parse_ring, polynomial_line_model, typical_piece
from nkcalc.witt import hh_tensor_model, nhc_model

line = polynomial_line_model(12)


def show(x):
    return " + ".join(f"{c}*t^{j}" for j, v in sorted(x.items()) for c in v.values()) or "0"


t = {1: {0: mpq(1)}}
print("V_2(t)        =", show(line.V(2, t)))
print("F_2 V_2(t)    =", show(line.F(2, line.V(2, t))))
print("[2] V_2(t)    =", show(line.homothety(2, line.V(2, t))))
print("F_3(t^6)      =", show(line.F(3, {6: {0: mpq(1)}})))
rep = check_relations(line, 4)
print("identities checked:", sum(rep.checked.values()), "failures:", len(rep.failures))

A = parse_ring("ring Q[x] / (x^2)")
for n, i in [(1, 1), (2, 1)]:
    model = hh_tensor_model(A, n, i, 6)
    direct = nhc_model(A, n, i, 6)
    print(f"HH_{n}^({i}) (x) tQ[t]: typical piece {typical_piece(model, [2, 3, 'x']).dim},"
          f" direct weight pieces {[direct.dims[j] for j in range(1, 7)]}")
