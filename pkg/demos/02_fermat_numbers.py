"""Generalized elliptic Fermat numbers F_k^(m) = D_{m^k} / D_{m^(k-1)} and their factorizations.

Run: python3 demos/02_fermat_numbers.py
"""

import math

from edsf import factorize, load_registry
from edsf.eds import power_term
from edsf.fermat import fermat_terms

reg = load_registry()
for rid, m, K in (("ex3", 3, 3), ("E1", 2, 4), ("E2", 2, 4)):
    rec = reg.get(rid)
    print(f"{rid}: {rec.curve}, P = {rec.point}, m = {m}")
    terms = fermat_terms(rec.curve, rec.point, m, K)
    for k, f in enumerate(terms):
        print(f"  F_{k} = {factorize(f)}")
    # the product telescopes back to a single sequence term
    print(f"  F_0 * ... * F_{K} == D_{m ** K}:", math.prod(terms) == power_term(rec.curve, rec.point, m, K))
    print()
