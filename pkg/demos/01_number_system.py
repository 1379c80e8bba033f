"""A walk through the mixed-radix number system.

Position i (least significant = 0) has weight m**i * i! and holds digits
0 .. m*(i+1)-1.  Exactly the integers 0 .. m**n * n! - 1 fit in n digits.
"""

from math import factorial

from gsg import MixedRadixNumber, decode, encode, encode_width, weights

m = 7
print(f"positional weights at radix seed m={m}:", weights(m, 6))

# encoding is a chain of divisions: by m, then 2m, then 3m, ...
x = 199761
d = encode(x, m)
print(f"{x} -> {d}")
print(f"{d} -> {decode(d)}")

# zero is the single digit (0); any width can be forced by zero-padding
print("zero:", encode(0, m))
print("width 8:", encode_width(x, m, 8))

# the largest n-digit string decodes to m**n * n! - 1
n = 5
top = MixedRadixNumber(m, tuple(m * (i + 1) - 1 for i in range(n)))
print(f"max {n}-digit string {top} = {decode(top)} = {m}^{n} * {n}! - 1 =",
      m**n * factorial(n) - 1)

# with m = 1 the system is the factorial number system
print("factorial system weights:", weights(1, 6))
print("463 in factorial digits:", encode(463, 1))

# digit strings are in bijection with their value range: count them
count = 1
for i in range(n):
    count *= m * (i + 1)
print(f"number of valid {n}-digit strings:", count, "=", m**n * factorial(n))
