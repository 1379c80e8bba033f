"""Equidistribution: the flag-major index is Mahonian for the root length.

Both the inversion sum and the flag-major index have the generating
function [m]_q [2m]_q .. [nm]_q over the whole group.
"""

from gsg import (
    canonical_length,
    enumerate_group,
    fmaj,
    fmaj_exponents,
    gen_t,
    histogram,
    length_L,
    parse_window,
    phi,
    poincare,
)

m, n = 3, 3

p = poincare(m, n)
print(f"q-integer product for (m,n)=({m},{n}):", p)
print("degree:", p.degree, " value at q=1:", sum(p.coeffs))

print("histogram of inv: ", histogram("inv", m, n))
print("histogram of fmaj:", histogram("fmaj", m, n))
print("histogram of L:   ", histogram("L", m, n))

# every element factors uniquely over the flag generators; the exponent sum
# is the flag-major index
w = parse_window("[2]3 [1]1 2", m)
print("w =", w, " exponents:", fmaj_exponents(w), " fmaj:", fmaj(w))

# the transport map: reading the inversion table as flag exponents matches
# fmaj on the image with L on the source
print("fmaj(phi(w)) =", fmaj(phi(w)), "= L(w) =", length_L(w))
print("phi is injective:",
      len({phi(v) for v in enumerate_group(m, n)}) == sum(1 for _ in enumerate_group(m, n)))

# the root length L and the word length agree at m = 2 but not beyond:
t2 = gen_t(3, 2, 2)
print("radix 3 witness: L(t2) =", length_L(t2), " word length =", canonical_length(t2))
for w2 in enumerate_group(2, 3):
    assert length_L(w2) == canonical_length(w2)
print("radix 2: L equals word length on all", sum(1 for _ in enumerate_group(2, 3)),
      "elements")
