"""The bijection chain digits <-> (subexceedant function, colors) <-> element.

A subexceedant function on ``1..n`` satisfies ``1 <= f(i) <= i``; there are
``n!`` of them and they biject onto the permutations via the transposition
product ``(n f(n)) .. (2 f(2)) (1 f(1))``, composed like functions (the
factor ``(1 f(1))`` applies first).  Splitting each mixed-radix digit as
``d = m*(f-1) + color`` extends this to a bijection between n-digit strings
and colored permutations, hence between the integers ``0 .. m**n * n! - 1``
and the group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group_core import GroupElement
from .mixed_radix import MixedRadixNumber, decode, encode_width

__all__ = [
    "SubexceedantFunction",
    "psi",
    "psi_inverse",
    "element_of_digits",
    "digits_of_element",
    "integer_of_element",
    "element_of_integer",
]


@dataclass(frozen=True)
class SubexceedantFunction:
    """Values ``f(1)..f(n)`` with ``1 <= f(i) <= i``."""

    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) < 1:
            raise ValueError("need at least one value")
        for i, v in enumerate(self.values, start=1):
            if not 1 <= v <= i:
                raise ValueError(f"f({i}) = {v} outside 1..{i}")

    @property
    def n(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return ";".join(str(v) for v in self.values)


def psi(f: SubexceedantFunction) -> tuple[int, ...]:
    """The permutation ``(n f(n)) .. (1 f(1))``, with ``(1 f(1))`` applied first.

    Applying transposition ``(i f(i))`` on the left swaps the values ``i``
    and ``f(i)`` wherever they sit in the window built so far.
    """
    n = f.n
    window = list(range(1, n + 1))
    pos = [0] + list(range(n))  # pos[v] = 0-based index of value v; pos[0] unused
    for i, fi in enumerate(f.values, start=1):
        if fi == i:
            continue
        pi, pf = pos[i], pos[fi]
        window[pi], window[pf] = window[pf], window[pi]
        pos[i], pos[fi] = pf, pi
    return tuple(window)


def psi_inverse(beta: tuple[int, ...]) -> SubexceedantFunction:
    """Recover ``f`` from a permutation by the fix-point reduction loop.

    Working down from ``i = n``: read off ``f(i)`` as the image of ``i``,
    then swap that image with the entry currently mapping to ``i``, making
    ``i`` a fixed point that the next round ignores.
    """
    n = len(beta)
    window = list(beta)
    pos = [0] * (n + 1)
    for idx, v in enumerate(window):
        pos[v] = idx
    values = [0] * n
    for i in range(n, 0, -1):
        values[i - 1] = window[i - 1]
        pi, pf = pos[i], i - 1
        window[pi], window[pf] = window[pf], window[pi]
        pos[window[pi]] = pi
        pos[window[pf]] = pf
    return SubexceedantFunction(tuple(values))


def element_of_digits(d: MixedRadixNumber) -> GroupElement:
    """The colored permutation encoded by an n-digit string.

    Digit ``d_{i-1}`` splits as ``m*(f(i)-1) + color_i``; the permutation
    part is the image of ``f`` under the transposition-product bijection.
    """
    m = d.m
    f = SubexceedantFunction(tuple(digit // m + 1 for digit in d.digits))
    colors = tuple(digit % m for digit in d.digits)
    return GroupElement(m, d.n, psi(f), colors)


def digits_of_element(w: GroupElement) -> MixedRadixNumber:
    """Inverse of :func:`element_of_digits`: ``d_{i-1} = m*(f(i)-1) + color_i``."""
    f = psi_inverse(w.beta)
    digits = tuple(
        w.m * (fi - 1) + r for fi, r in zip(f.values, w.colors)
    )
    return MixedRadixNumber(w.m, digits)


def integer_of_element(w: GroupElement) -> int:
    """The integer representation, in ``0 .. m**n * n! - 1``."""
    return decode(digits_of_element(w))


def element_of_integer(x: int, m: int, n: int) -> GroupElement:
    """Inverse of :func:`integer_of_element`; OverflowError when out of range."""
    return element_of_digits(encode_width(x, m, n))
