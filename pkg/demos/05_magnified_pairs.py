"""Isogenous ("magnified") pairs: source Fermat numbers divide target ones, and
canonical heights scale by the degree.

Run: python3 demos/05_magnified_pairs.py
"""

from edsf import degree_ratio, load_registry, magnified_divisibility

reg = load_registry()
for pair in reg.pairs:
    src, tgt = reg.get(pair.source_id), reg.get(pair.target_id)
    m = pair.coprime_bases[0]
    K = 4 if m == 2 else 3
    res = magnified_divisibility(src.curve, src.point, tgt.curve, tgt.point, m, K)
    print(f"{pair.source_id} -> {pair.target_id} (degree {pair.degree}, m = {m})")
    for row in res.rows:
        print(f"  k={row.k}: F_k(source) | F_k(target): {row.divides}  [{row.source} | ...]")
    r = degree_ratio(src.curve, src.point, tgt.curve, tgt.point)
    print(f"  hhat(target) / hhat(source) = {r:.5f}")
