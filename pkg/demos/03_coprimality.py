"""Pairwise gcds of F_0^(m), ..., F_K^(m) all divide m; for prime powers they are 1 or m.

Run: python3 demos/03_coprimality.py
"""

from edsf import gcd_matrix, load_registry
from edsf.fermat import entry_point, verify_ord_proposition

reg = load_registry()
for m in (3, 5, 9, 15):
    K = 4 if m < 9 else 3
    for rid in ("ex3", "E1p", "E2p"):
        rec = reg.get(rid)
        values = sorted(set(gcd_matrix(rec.curve, rec.point, m, K).values()))
        print(f"m={m:2d} {rid:4s} gcds of F_0..F_{K}: {values}")

# where 3 first appears, and the exact power it contributes afterwards
rec = reg.get("ex3")
t = entry_point(rec.curve, rec.point, 3, 3, 6)
print("\nex3: 3 first divides D_{3^(t-1)} at t =", t)
for s in range(t, 6):
    print(f"  ord_3(F_{s}^(3)) == ord_3(3):", verify_ord_proposition(rec.curve, rec.point, 3, 3, s))
print("  ord_3(F_2^(9)) == ord_3(9):", verify_ord_proposition(rec.curve, rec.point, 9, 3, 2))
