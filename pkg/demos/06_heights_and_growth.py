"""Canonical height two ways, and the growth rate log(F_k^(m)) / m^(2k).

Run: python3 demos/06_heights_and_growth.py
"""

from edsf import canonical_height_doubling, canonical_height_eds, growth_ratio, load_registry, naive_height

reg = load_registry()
rec = reg.get("ex3")
c, p = rec.curve, rec.point
print("naive height of P:", naive_height(c, p))

h = canonical_height_doubling(c, p, k_max=10, tol=0)
for k, a in h.approximants:
    print(f"  h([2^{k}]P) / 4^{k} = {a:.9f}")
print(f"hhat by doubling: {h.value:.9f} (tail bound {h.error_bound:.1e})")

e = canonical_height_eds(c, p, m=3, k_max=5)
print(f"hhat from log(D_(3^k)^2) / 3^(2k): {e.value:.9f} (tail bound {e.error_bound:.1e})")

for k in range(1, 6):
    g = growth_ratio(c, p, 3, k)
    print(f"k={k}: log(F_k) / 3^(2k) = {g.ratio:.7f}, prediction (4/9) hhat = {g.limit_prediction:.7f}, "
          f"relative error {g.relative_error:.1e}")
