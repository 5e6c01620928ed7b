"""Prime factors of F_k^(m) are exactly the moduli where P has order m^k.

Run: python3 demos/04_order_universality.py
"""

from edsf import factorize, has_order_exactly, load_registry, point_order_bruteforce, verify_order_universality
from edsf.fermat import fermat_value

reg = load_registry()
rec = reg.get("ex3")
c, p, m = rec.curve, rec.point, 3

for k in range(1, 4):
    f = fermat_value(c, p, m, k)
    for q in factorize(f).primes():
        if (6 * c.disc * m) % q == 0:
            continue
        line = f"q = {q} divides F_{k}: order {m}^{k} mod q? {has_order_exactly(c, p, m, k, q)}"
        if q < 10 ** 6:
            line += f" (brute force order: {point_order_bruteforce(c, p, q)})"
        print(line)

# a composite modulus works directly in Z/NZ
print("\nN = 11 * 107, K = 3:", verify_order_universality(c, p, m, 11 * 107, 3))

# a small prime that never divides the sequence early has a larger order
print("order of P mod 593:", point_order_bruteforce(c, p, 593))

e1 = reg.get("E1")
print("E1, m = 2, N = 17:", verify_order_universality(e1.curve, e1.point, 2, 17, 3))
