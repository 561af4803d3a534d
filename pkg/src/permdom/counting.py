"""Exact counting formulas for permutation graphs by domination behavior.

Everything here is plain integer arithmetic (Python ints are arbitrary
precision); factorials pass 64 bits shortly after n = 20, so no fixed-width
type would do.  Composition sums follow the displayed formulas, with empty
composition ranges contributing the single all-zero tuple.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial

from .errors import IndexOutOfRange, MissingTableEntry, NotSorted


@dataclass
class CountTable:
    """Exact tallies indexed by (n,), (n, t) or (n, k) tuples."""

    kind: str  # one of: g1, f1t, c, d, g
    entries: dict[tuple[int, ...], int] = field(default_factory=dict)

    def get(self, *index: int, default: int = 0) -> int:
        return self.entries.get(tuple(index), default)

    def has_row(self, n: int) -> bool:
        return any(idx[0] == n for idx in self.entries)


def singleton_dom_count(n: int, k: int) -> int:
    """Permutation graphs on n vertices with {k} as a dominating set:
    (n-k)! (k-1)!."""
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"need 1 <= k <= n, got k={k}, n={n}")
    return factorial(n - k) * factorial(k - 1)


@lru_cache(maxsize=None)
def g1(n: int) -> int:
    """Permutation graphs on n vertices with domination number 1.

    g(0,1) = 0 and g(n,1) = sum_{k=1}^{n} (n-k)! f(k-1,1,0).
    """
    if n < 0:
        raise IndexOutOfRange(f"negative n: {n}")
    if n == 0:
        return 0
    return sum(factorial(n - k) * f1(k - 1, 0) for k in range(1, n + 1))


@lru_cache(maxsize=None)
def f1(n: int, t: int) -> int:
    """Permutation graphs on n vertices with exactly t singleton dominators.

    f(n,1,0) = n! - g(n,1) and, for t >= 1,
    f(n,1,t) = sum_{k=1}^{n-t+1} f(n-k,1,t-1) f(k-1,1,0).
    """
    if n < 0:
        raise IndexOutOfRange(f"negative n: {n}")
    if t < 0 or t > n:
        return 0
    if t == 0:
        return factorial(n) - g1(n)
    return sum(f1(n - k, t - 1) * f1(k - 1, 0) for k in range(1, n - t + 2))


def _check_pair(n: int, u: int, v: int) -> None:
    if not 1 <= u < v <= n:
        raise IndexOutOfRange(f"need 1 <= u < v <= n, got u={u}, v={v}, n={n}")


def pair_count_nonadjacent(n: int, u: int, v: int) -> int:
    """Permutation graphs on n vertices dominated by {u, v} with u, v
    nonadjacent."""
    _check_pair(n, u, v)
    total = 0
    for x1 in range(u):
        x2 = u - 1 - x1
        for y1 in range(v - u):
            y2 = v - u - 1 - y1
            for z1 in range(n - v + 1):
                z2 = n - v - z1
                total += (
                    factorial(y1 + z2)
                    * factorial(x1 + z1)
                    * factorial(x2 + y2)
                    * comb(u - 1, x1)
                    * comb(v - u - 1, y1)
                    * comb(n - v, z1)
                )
    return total


def pair_count_adjacent(n: int, u: int, v: int) -> int:
    """Permutation graphs on n vertices dominated by {u, v} with u, v
    adjacent."""
    _check_pair(n, u, v)
    total = 0
    for x1 in range(v - u):
        for x2 in range(v - u - x1):
            x3 = v - u - 1 - x1 - x2
            for y1 in range(u):
                y2 = u - 1 - y1
                for z1 in range(n - v + 1):
                    z2 = n - v - z1
                    total += (
                        factorial(x1 + z2)
                        * factorial(z1 + x3 + y1)
                        * factorial(y2 + x2)
                        * comb(v - u - 1, x1)
                        * comb(v - u - 1 - x1, x2)
                        * comb(u - 1, y1)
                        * comb(n - v, z1)
                    )
    return total


def pair_count(n: int, u: int, v: int) -> int:
    """Permutation graphs on n vertices dominated by {u, v}."""
    return pair_count_nonadjacent(n, u, v) + pair_count_adjacent(n, u, v)


def efficient_dom_count(n: int, a) -> int:
    """Permutation graphs on n vertices efficiently dominated by the
    strictly increasing vertex list a.

    For |a| >= 2 this is the composition sum over the value gaps between
    consecutive members; the block of values between a_i and a_{i+1} splits
    into private neighbors of a_i placed right of it and private neighbors
    of a_{i+1} placed left of it.  A singleton is efficient exactly when it
    dominates, so |a| = 1 falls back to the singleton count.
    """
    a = list(a)
    if not a or not 1 <= a[0] <= n or a[-1] > n:
        raise IndexOutOfRange(f"members must lie in [1, {n}]: {a}")
    if any(x >= y for x, y in zip(a, a[1:])):
        raise NotSorted(f"not strictly increasing: {a}")
    k = len(a)
    if k == 1:
        return singleton_dom_count(n, a[0])

    gaps = [a[i + 1] - a[i] - 1 for i in range(k - 1)]
    total = 0
    for split in _gap_splits(gaps):
        # left[i] / right[i]: private neighbors of a_{i+1} placed on each
        # side of it in value order; split[j] = (x_{j,1}, x_{j,2}).
        left = [a[0] - 1] + [x2 for _, x2 in split]
        right = [x1 for x1, _ in split] + [n - a[-1]]
        term = factorial(right[0]) * factorial(left[-1])
        for i in range(k - 1):
            term *= factorial(left[i] + right[i + 1])
        for j in range(k - 1):
            term *= comb(gaps[j], split[j][0])
        total += term
    return total


def _gap_splits(gaps):
    """All ways to split each gap into an ordered pair (x1, x2)."""
    if not gaps:
        yield []
        return
    head, rest = gaps[0], gaps[1:]
    for tail in _gap_splits(rest):
        for x1 in range(head + 1):
            yield [(x1, head - x1)] + tail


def multinomial(parts) -> int:
    """Multinomial coefficient (sum(parts) choose parts), as a product of
    binomials."""
    total = 0
    out = 1
    for p in parts:
        total += p
        out *= comb(total, p)
    return out


def compositions(total: int, parts: int, min_part: int = 0):
    """Ordered tuples of `parts` integers >= min_part summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min_part, total - min_part * (parts - 1) + 1):
        for rest in compositions(total - first, parts - 1, min_part):
            yield (first,) + rest


def _size_tuples(mults, n):
    """Strictly increasing size tuples (n_1 < ... < n_l) with
    sum(mults[i] * n_i) = n."""

    def rec(idx: int, low: int, remaining: int):
        if idx == len(mults):
            if remaining == 0:
                yield ()
            return
        r = mults[idx]
        rest_min = sum(mults[idx + 1:])  # every later size exceeds this one
        for size in range(low, remaining + 1):
            need = remaining - r * size
            if need < rest_min * (size + 1):
                break
            for tail in rec(idx + 1, size + 1, need):
                yield (size,) + tail

    yield from rec(0, 1, n)


def disconnected_count(n: int, k: int, c_table: CountTable) -> int:
    """Disconnected permutation graphs on n vertices with domination number
    k, from the table of connected counts c(m, j) for m < n.

    Sums over the number of components r, the multiset of component sizes
    (r_i components of size n_i), and the split of the domination number
    across the size classes.
    """
    for m in range(1, n):
        if not c_table.has_row(m):
            raise MissingTableEntry(f"no c(n, k) entries for n = {m}")
    total = 0
    for r in range(2, k + 1):
        for ell in range(1, r + 1):
            for mults in compositions(r, ell, min_part=1):
                for sizes in _size_tuples(mults, n):
                    for ks in compositions(k, ell):
                        if any(ki < ri for ki, ri in zip(ks, mults)):
                            continue
                        term = multinomial(mults)
                        for ni, ri, ki in zip(sizes, mults, ks):
                            inner = 0
                            for kparts in compositions(ki, ri, min_part=1):
                                prod = 1
                                for kt in kparts:
                                    prod *= c_table.get(ni, kt)
                                    if prod == 0:
                                        break
                                inner += prod
                            term *= inner
                            if term == 0:
                                break
                        total += term
    return total
