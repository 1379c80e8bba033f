"""Root-system statistics, inversion tables, rank/unrank and q-polynomials.

The root system lives on colored basis vectors: a root is the formal
difference of two distinct colored vectors.  The root-theoretic length of
an element is the number of simple-side roots it sends negative; split by
anchor coordinate this gives the i-inversion numbers, whose vector is a
valid mixed-radix digit string.  Decoding that string (plus one) ranks the
group, and reading it as flag-generator exponents transports the length
statistic onto the flag-major index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import (
    DecompositionFailure,
    IndexOutOfRange,
    RankOutOfRange,
    UnsupportedRadix,
)
from .group_core import (
    DEFAULT_BUDGET,
    ColoredValue,
    GroupElement,
    enumerate_group,
    gen_sigma,
    group_order,
    identity,
    inverse,
    multiply,
    power,
)
from .mixed_radix import MixedRadixNumber, decode, encode_width

__all__ = [
    "Root",
    "InversionTable",
    "QPolynomial",
    "all_roots",
    "delta",
    "delta_block",
    "is_negative",
    "act",
    "length_L",
    "inv_oracle",
    "inv_closed",
    "inversion_table",
    "rank",
    "unrank",
    "fmaj_exponents",
    "fmaj",
    "phi",
    "poincare",
    "histogram",
]


@dataclass(frozen=True)
class Root:
    """The formal difference of colored basis vectors ``(a,j)`` and ``(b,l)``."""

    a: int
    j: int
    b: int
    l: int

    def __post_init__(self):
        if (self.a, self.j) == (self.b, self.l):
            raise ValueError("the two colored vectors of a root must differ")

    def negated(self) -> "Root":
        return Root(self.b, self.l, self.a, self.j)


def _require_radix(m: int):
    if m < 2:
        raise UnsupportedRadix(f"root system machinery needs m >= 2, got m={m}")


def all_roots(m: int, n: int) -> set[Root]:
    """Every formal difference of two distinct colored basis vectors."""
    _require_radix(m)
    vectors = [(a, j) for j in range(1, n + 1) for a in range(m)]
    return {
        Root(a, j, b, l)
        for (a, j) in vectors
        for (b, l) in vectors
        if (a, j) != (b, l)
    }


def delta(m: int, n: int) -> set[Root]:
    """The simple-side set: ``e_j`` minus any colored ``e_l`` with ``l <= j``.

    The degenerate color-0 same-index term is excluded (it is not a root).
    """
    _require_radix(m)
    out = set()
    for j in range(1, n + 1):
        for l in range(1, j + 1):
            for k in range(m):
                if l == j and k == 0:
                    continue
                out.add(Root(0, j, k, l))
    return out


def delta_block(m: int, n: int, i: int) -> set[Root]:
    """The block of the simple-side set anchored at coordinate ``n+1-i``."""
    _require_radix(m)
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"block index {i} outside 1..{n}")
    p = n + 1 - i
    out = {Root(0, p, k, p) for k in range(1, m)}
    out |= {Root(0, p, k, j) for j in range(1, p) for k in range(m)}
    return out


def is_negative(r: Root) -> bool:
    """O(1) classifier for membership in the negative half.

    Same index: negative iff the leading exponent is larger.  Leading index
    strictly larger: negative iff its exponent is nonzero.  Leading index
    strictly smaller: negative iff the trailing exponent is zero.  Exactly
    one of a root and its negation is negative.
    """
    if r.j == r.l:
        return r.a > r.b
    if r.j > r.l:
        return r.a != 0
    return r.b == 0


def act(w: GroupElement, r: Root) -> Root:
    """Image of a root: each colored vector ``(a, j)`` maps to
    ``(a + color_j mod m, beta_j)``."""
    return Root(
        (r.a + w.colors[r.j - 1]) % w.m,
        w.beta[r.j - 1],
        (r.b + w.colors[r.l - 1]) % w.m,
        w.beta[r.l - 1],
    )


def length_L(w: GroupElement) -> int:
    """Number of simple-side roots sent negative (the root-theoretic length)."""
    return sum(1 for r in delta(w.m, w.n) if is_negative(act(w, r)))


def inv_oracle(w: GroupElement, i: int) -> int:
    """i-inversions by direct root counting over the i-th block."""
    return sum(1 for r in delta_block(w.m, w.n, i) if is_negative(act(w, r)))


def inv_closed(w: GroupElement, i: int) -> int:
    """i-inversions in closed form, no root system needed (m = 1 allowed).

    At position ``p = n+1-i``: the color there, plus m per earlier smaller
    value when that color is nonzero, plus one per earlier larger value.
    """
    if not 1 <= i <= w.n:
        raise IndexOutOfRange(f"inversion index {i} outside 1..{w.n}")
    p = w.n + 1 - i
    r_p = w.colors[p - 1]
    b_p = w.beta[p - 1]
    smaller = sum(1 for j in range(p - 1) if w.beta[j] < b_p)
    larger = (p - 1) - smaller
    return r_p + (w.m * smaller if r_p != 0 else 0) + larger


@dataclass(frozen=True)
class InversionTable:
    """The vector of i-inversions, most significant (i = 1) first.

    Entry ``i`` is bounded by ``m*(n-i+1) - 1``, which makes the table a
    valid mixed-radix digit string under ``d_{n-i} = entry_i``.
    """

    m: int
    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.n:
            raise ValueError("one entry per coordinate required")
        for i, e in enumerate(self.entries, start=1):
            bound = self.m * (self.n - i + 1) - 1
            if not 0 <= e <= bound:
                raise ValueError(f"entry {i} = {e} outside 0..{bound}")

    def to_digits(self) -> MixedRadixNumber:
        return MixedRadixNumber(self.m, tuple(reversed(self.entries)))

    def __str__(self) -> str:
        return ":".join(str(e) for e in self.entries)


def inversion_table(w: GroupElement) -> InversionTable:
    """All i-inversions via the closed form."""
    return InversionTable(
        w.m, w.n, tuple(inv_closed(w, i) for i in range(1, w.n + 1))
    )


def rank(w: GroupElement) -> int:
    """1-based position of ``w`` in the inversion-table enumeration."""
    return decode(inversion_table(w).to_digits()) + 1


def _candidates(remaining: list[int], m: int) -> list[ColoredValue]:
    # plain values descending, then colored values ascending by value
    out = [ColoredValue(v, 0) for v in sorted(remaining, reverse=True)]
    for v in sorted(remaining):
        out.extend(ColoredValue(v, k) for k in range(1, m))
    return out


def unrank(r: int, m: int, n: int) -> GroupElement:
    """The element whose rank is ``r``; inverse of :func:`rank`.

    Positions are filled from n down to 1.  At each step the digit selects
    an entry from the candidate list over the remaining values (plain
    entries descending, then colored entries ascending by value), and all
    entries sharing the selected value drop out.
    """
    order = group_order(m, n)
    if not 1 <= r <= order:
        raise RankOutOfRange(f"rank {r} outside 1..{order}")
    digits = encode_width(r - 1, m, n).digits
    remaining = list(range(1, n + 1))
    beta = [0] * n
    colors = [0] * n
    for i in range(1, n + 1):
        choice = _candidates(remaining, m)[digits[n - i]]
        beta[n - i] = choice.value
        colors[n - i] = choice.color
        remaining.remove(choice.value)
    return GroupElement(m, n, tuple(beta), tuple(colors))


def fmaj_exponents(w: GroupElement) -> list[int]:
    """Exponents of the unique flag-generator factorization.

    Peels coset representatives from the top: for each ``i`` from ``n-1``
    down to 1, the images of ``i+1`` under the powers of the i-th flag
    generator are pairwise distinct, so exactly one power matches ``w`` at
    ``i+1``; dividing it out fixes position ``i+1`` and recursion continues
    below.  What remains determines the exponent of the color rotation.
    """
    m, n = w.m, w.n
    exps = [0] * n
    cur = w
    for i in range(n - 1, 0, -1):
        sig = gen_sigma(m, n, i)
        images = [ColoredValue(i + 1, 0)]
        for _ in range(m * (i + 1) - 1):
            images.append(sig.apply(images[-1]))
        if len(set(images)) != m * (i + 1):
            raise DecompositionFailure(
                f"power images of flag generator {i} are not distinct"
            )
        target = ColoredValue(cur.beta[i], cur.colors[i])
        k = images.index(target)
        exps[i] = k
        cur = multiply(power(inverse(sig), k), cur)
    if cur.beta != identity(m, n).beta or any(cur.colors[1:]):
        raise DecompositionFailure("residue after peeling is not a color rotation")
    exps[0] = cur.colors[0]
    return exps


def fmaj(w: GroupElement) -> int:
    """The flag-major index: sum of the flag-generator exponents."""
    return sum(fmaj_exponents(w))


def phi(w: GroupElement) -> GroupElement:
    """The bijection carrying the inversion statistic onto the flag-major index.

    Reads the inversion table as flag-generator exponents, top down.
    """
    entries = inversion_table(w).entries
    result = identity(w.m, w.n)
    for i in range(w.n - 1, -1, -1):
        a_i = entries[w.n - 1 - i]
        result = multiply(result, power(gen_sigma(w.m, w.n, i), a_i))
    return result


@dataclass(frozen=True)
class QPolynomial:
    """Dense nonnegative integer coefficients, index = degree in q."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        trimmed = tuple(self.coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed = trimmed[:-1]
        object.__setattr__(self, "coeffs", trimmed)

    @classmethod
    def q_integer(cls, k: int) -> "QPolynomial":
        """``1 + q + .. + q^(k-1)``."""
        return cls((1,) * k)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        if not self.coeffs or not other.coeffs:
            return QPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial(tuple(out))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


def poincare(m: int, n: int) -> QPolynomial:
    """The product of the q-integers ``[im]_q`` for ``i = 1..n``, exactly."""
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    out = QPolynomial((1,))
    for i in range(1, n + 1):
        out = out * QPolynomial.q_integer(i * m)
    return out


Statistic = Literal["inv", "fmaj", "L"]


def histogram(
    statistic: Statistic, m: int, n: int, budget: int = DEFAULT_BUDGET
) -> QPolynomial:
    """Coefficient ``c_k`` counts the elements with statistic value ``k``.

    ``inv`` sums the closed-form inversion table, ``L`` counts negative
    roots directly; the two must agree but follow independent code paths.
    """
    if statistic == "inv":
        stat = lambda w: sum(inversion_table(w).entries)
    elif statistic == "fmaj":
        stat = fmaj
    elif statistic == "L":
        stat = length_L
    else:
        raise ValueError(f"unknown statistic {statistic!r}")
    counts: dict[int, int] = {}
    for w in enumerate_group(m, n, budget):
        k = stat(w)
        counts[k] = counts.get(k, 0) + 1
    coeffs = [0] * (max(counts) + 1 if counts else 0)
    for k, c in counts.items():
        coeffs[k] = c
    return QPolynomial(tuple(coeffs))
