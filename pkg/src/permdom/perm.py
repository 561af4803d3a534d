"""Permutations in one-line notation.

A permutation p on {1..n} is stored as the tuple (p(1), ..., p(n)).  All
vertex/value semantics in this package are 1-indexed; the tuple index is the
only place 0-indexing appears.  The empty permutation (n = 0) is allowed as
an internal recursion base case but is rejected by the parser.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .errors import EmptyInput, NotABijection, ParseError

MAX_GRAPH_ORDER = 64


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..n}, held as its one-line notation."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if sorted(self.image) != list(range(1, n + 1)):
            raise NotABijection(f"not a bijection on [{n}]: {list(self.image)}")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        """p(i) for a position 1 <= i <= n."""
        return self.image[i - 1]

    @cached_property
    def _positions(self) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(self.image, start=1):
            pos[v - 1] = i
        return tuple(pos)

    def position(self, value: int) -> int:
        """p^-1(value): the position of a value in one-line notation."""
        return self._positions[value - 1]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.image)

    def __repr__(self) -> str:
        return f"Permutation([{self}])"


def permutation(values) -> Permutation:
    """Build a Permutation from any iterable of values."""
    return Permutation(tuple(values))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def decreasing(n: int) -> Permutation:
    """[n, n-1, ..., 1]: every pair inverted."""
    return Permutation(tuple(range(n, 0, -1)))


_TOKEN = re.compile(r"-?\d+$")


def parse_permutation(text: str) -> Permutation:
    """Parse comma-separated one-line notation, with optional brackets.

    >>> parse_permutation("3,1,2,5,4").image
    (3, 1, 2, 5, 4)
    >>> parse_permutation("[1]").image
    (1,)
    """
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    s = s.strip()
    if not s:
        raise EmptyInput("empty permutation")
    values = []
    for tok in s.split(","):
        tok = tok.strip()
        if not _TOKEN.match(tok):
            raise ParseError(f"bad token {tok!r}")
        values.append(int(tok))
    return Permutation(tuple(values))


def inverse(p: Permutation) -> Permutation:
    """The permutation q with q(p(i)) = i for all i."""
    return Permutation(p._positions)


def reverse(p: Permutation) -> Permutation:
    """Reversed one-line notation: r(i) = p(n+1-i)."""
    return Permutation(p.image[::-1])


def strong_fixed_points(p: Permutation) -> frozenset[int]:
    """Values k with every smaller value positioned before k and every
    larger value positioned after k in one-line notation.

    >>> sorted(strong_fixed_points(parse_permutation("1,3,2")))
    [1]
    """
    n = p.n
    out = []
    max_before = 0
    for k in range(1, n + 1):
        pos = p.position(k)
        # Both conditions together force pos == k, so the suffix check
        # reduces to the prefix positions filling {1..k-1} exactly.
        if max_before < pos == k:
            out.append(k)
        max_before = max(max_before, pos)
    return frozenset(out)
