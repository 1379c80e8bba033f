"""Exact arithmetic for colored permutations.

An element of the group on parameters ``(m, n)`` is a permutation of
``1..n`` together with a color exponent in ``0..m-1`` per position: position
``k`` maps to the value ``beta[k]`` carrying color ``colors[k]``.  Colors are
exponents of a fixed primitive m-th root of unity which is never evaluated
numerically; all arithmetic stays in the integers mod m.

Window text format (bit-exact): entries separated by a single space, each
entry an optional prefix ``[c]`` with ``1 <= c <= m-1`` followed by the
decimal value; color 0 carries no prefix.  Example: ``"[2]3 [4]1 [1]6 5"``.

Products compose like functions: ``multiply(u, v)`` applies ``v`` first,
sending ``k`` to ``u(v(k))`` on colored values.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass
from math import factorial
from typing import Iterator

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    IndexOutOfRange,
    WindowParseError,
)

__all__ = [
    "ColoredValue",
    "GroupElement",
    "group_order",
    "identity",
    "multiply",
    "inverse",
    "power",
    "gen_s",
    "gen_t",
    "gen_sigma",
    "longest_element",
    "canonical_length",
    "enumerate_group",
    "parse_window",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10**6

_ENTRY_RE = re.compile(r"^(?:\[(\d+)\])?([0-9]+)$")


@dataclass(frozen=True)
class ColoredValue:
    """A value ``1..n`` carrying a color exponent ``0..m-1``."""

    value: int
    color: int


@dataclass(frozen=True)
class GroupElement:
    """A colored permutation: ``k -> beta[k]`` with color ``colors[k]``.

    ``beta`` and ``colors`` are stored 0-indexed: ``beta[k-1]`` is the image
    of ``k``.  Instances are immutable and hashable.
    """

    m: int
    n: int
    beta: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"need m >= 1 and n >= 1, got ({self.m}, {self.n})")
        if sorted(self.beta) != list(range(1, self.n + 1)):
            raise ValueError(f"{self.beta} is not a permutation of 1..{self.n}")
        if len(self.colors) != self.n:
            raise ValueError("one color per position required")
        for r in self.colors:
            if not 0 <= r <= self.m - 1:
                raise ValueError(f"color {r} outside 0..{self.m - 1}")

    def apply(self, cv: ColoredValue) -> ColoredValue:
        """Image of a colored value; colors add mod m."""
        return ColoredValue(
            self.beta[cv.value - 1], (cv.color + self.colors[cv.value - 1]) % self.m
        )

    def window(self) -> str:
        """The one-line window text form."""
        parts = []
        for v, c in zip(self.beta, self.colors):
            parts.append(f"[{c}]{v}" if c else str(v))
        return " ".join(parts)

    def __str__(self) -> str:
        return self.window()


def group_order(m: int, n: int) -> int:
    return m**n * factorial(n)


def identity(m: int, n: int) -> GroupElement:
    return GroupElement(m, n, tuple(range(1, n + 1)), (0,) * n)


def multiply(u: GroupElement, v: GroupElement) -> GroupElement:
    """Product with ``v`` acting first: ``k -> u(v(k))`` on colored values."""
    if (u.m, u.n) != (v.m, v.n):
        raise DimensionMismatch(
            f"cannot multiply ({u.m},{u.n}) element by ({v.m},{v.n}) element"
        )
    beta = tuple(u.beta[g - 1] for g in v.beta)
    colors = tuple(
        (vc + u.colors[g - 1]) % u.m for g, vc in zip(v.beta, v.colors)
    )
    return GroupElement(u.m, u.n, beta, colors)


def inverse(u: GroupElement) -> GroupElement:
    """The two-sided inverse: permutation inverts, colors negate along it."""
    beta_inv = [0] * u.n
    for k, image in enumerate(u.beta, start=1):
        beta_inv[image - 1] = k
    colors = tuple((-u.colors[beta_inv[j] - 1]) % u.m for j in range(u.n))
    return GroupElement(u.m, u.n, tuple(beta_inv), colors)


def power(u: GroupElement, k: int) -> GroupElement:
    """``u`` composed with itself ``k`` times; negative ``k`` uses the inverse."""
    if k < 0:
        return power(inverse(u), -k)
    result = identity(u.m, u.n)
    base = u
    while k:
        if k & 1:
            result = multiply(result, base)
        base = multiply(base, base)
        k >>= 1
    return result


def gen_s(m: int, n: int, i: int) -> GroupElement:
    """The color-free adjacent transposition swapping ``i`` and ``i+1``."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"transposition index {i} outside 1..{n - 1}")
    beta = list(range(1, n + 1))
    beta[i - 1], beta[i] = beta[i], beta[i - 1]
    return GroupElement(m, n, tuple(beta), (0,) * n)


def gen_t(m: int, n: int, i: int) -> GroupElement:
    """The color rotation at position ``i`` (identity permutation, color 1).

    With m = 1 there are no colors and this is the identity.
    """
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"color generator index {i} outside 1..{n}")
    colors = [0] * n
    colors[i - 1] = 1 % m
    return GroupElement(m, n, tuple(range(1, n + 1)), tuple(colors))


def gen_sigma(m: int, n: int, i: int) -> GroupElement:
    """The i-th flag generator: ``t_1`` for i = 0, else ``s_i .. s_1 t_1``."""
    if not 0 <= i <= n - 1:
        raise IndexOutOfRange(f"flag generator index {i} outside 0..{n - 1}")
    w = gen_t(m, n, 1)
    for j in range(1, i + 1):
        w = multiply(gen_s(m, n, j), w)
    return w


def longest_element(m: int, n: int) -> GroupElement:
    """Identity permutation with every color maximal (identity when m = 1)."""
    return GroupElement(m, n, tuple(range(1, n + 1)), (m - 1,) * n)


def _standard_generators(m: int, n: int) -> list[GroupElement]:
    gens = [gen_t(m, n, 1)]
    gens += [gen_s(m, n, i) for i in range(1, n)]
    return gens


def canonical_length(w: GroupElement, budget: int = DEFAULT_BUDGET) -> int:
    """Length of the shortest positive word in the standard generators.

    Breadth-first search over the Cayley graph from the identity, using the
    letters ``t_1, s_1, .., s_{n-1}`` only (no formal inverses: the
    transpositions are involutions and ``t_1`` has finite order).
    """
    order = group_order(w.m, w.n)
    if order > budget:
        raise BudgetExceeded(f"group order {order} exceeds budget {budget}")
    gens = _standard_generators(w.m, w.n)
    start = identity(w.m, w.n)
    if w == start:
        return 0
    seen = {start}
    frontier = deque([start])
    dist = 0
    while frontier:
        dist += 1
        for _ in range(len(frontier)):
            u = frontier.popleft()
            for g in gens:
                v = multiply(u, g)
                if v in seen:
                    continue
                if v == w:
                    return dist
                seen.add(v)
                frontier.append(v)
    raise AssertionError("generators failed to reach the element")  # unreachable


def enumerate_group(
    m: int, n: int, budget: int = DEFAULT_BUDGET
) -> Iterator[GroupElement]:
    """Yield every element exactly once (all permutations x all color vectors).

    The budget is checked at call time, not at first iteration.
    """
    order = group_order(m, n)
    if order > budget:
        raise BudgetExceeded(f"group order {order} exceeds budget {budget}")

    def generate():
        for beta in itertools.permutations(range(1, n + 1)):
            for colors in itertools.product(range(m), repeat=n):
                yield GroupElement(m, n, beta, colors)

    return generate()


def parse_window(text: str, m: int) -> GroupElement:
    """Parse the window text form; the error message names any bad entry.

    The number of entries fixes n; the values must form a permutation of
    1..n and color prefixes must lie in 1..m-1.
    """
    entries = text.split(" ") if text else []
    if not entries or entries == [""]:
        raise WindowParseError("empty window")
    beta = []
    colors = []
    for pos, entry in enumerate(entries, start=1):
        match = _ENTRY_RE.match(entry)
        if match is None:
            raise WindowParseError(f"entry {pos} ({entry!r}) is malformed")
        color = int(match.group(1)) if match.group(1) is not None else 0
        value = int(match.group(2))
        if match.group(1) is not None and not 1 <= color <= m - 1:
            raise WindowParseError(
                f"entry {pos} ({entry!r}): color {color} outside 1..{m - 1}"
            )
        beta.append(value)
        colors.append(color)
    n = len(entries)
    for pos, value in enumerate(beta, start=1):
        if not 1 <= value <= n:
            raise WindowParseError(f"entry {pos}: value {value} outside 1..{n}")
    if len(set(beta)) != n:
        dup = next(v for v in beta if beta.count(v) > 1)
        raise WindowParseError(f"value {dup} appears more than once")
    return GroupElement(m, n, tuple(beta), tuple(colors))
