"""Exact group law on y^2 = x^3 + x^2 - 4x and the divisibility sequence of P = (-2, 2).

Run: python3 demos/01_group_law_and_eds.py
"""

from edsf import RationalPoint, add, eds_decompose, make_curve, scalar_mul
from edsf.eds import eds_terms, verify_divisibility_law

E = make_curve(0, 1, 0, -4, 0)
P = RationalPoint(-2, 2)
print("curve:", E, " discriminant:", E.disc)

# multiples stay exact; denominators are always squares and cubes
for n in (1, 2, 3, 9):
    Q = scalar_mul(E, n, P)
    dec = eds_decompose(E, P, n)
    print(f"[{n}]P = {Q}")
    print(f"      A = {dec.A}, B = {dec.B}, D = {dec.D}")

print("P + P + P == [3]P:", add(E, add(E, P, P), P) == scalar_mul(E, 3, P))

D = eds_terms(E, P, range(1, 21))
print("D_1..D_20:", [int(d) for d in D])
print("D_m | D_n whenever m | n (n <= 20):", verify_divisibility_law(E, P, 20))
