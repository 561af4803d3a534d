"""Permutation graphs with bit-vector adjacency.

Vertices are {1..n}; row v holds the open neighborhood N(v) as an integer
bitmask with bit (u-1) set for each neighbor u.  n is capped at 64 so every
row fits a machine word, which keeps the exact-solver inner loop to a few
bitwise ors.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import OrderTooLarge, VertexOutOfRange
from .perm import MAX_GRAPH_ORDER, Permutation

VertexSet = frozenset  # vertex sets at the API boundary are frozensets of int


def mask_of(vertices) -> int:
    """Bitmask for an iterable of vertices."""
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> frozenset[int]:
    """Vertices of a bitmask, as a frozenset."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


@dataclass(frozen=True)
class PermutationGraph:
    n: int
    rows: tuple[int, ...]  # rows[v-1] = open neighborhood of v as a bitmask
    source: Permutation

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return vertices_of(self.rows[v - 1])

    def degree(self, v: int) -> int:
        self._check(v)
        return self.rows[v - 1].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def closed_row(self, v: int) -> int:
        """N[v] as a bitmask."""
        self._check(v)
        return self.rows[v - 1] | (1 << (v - 1))

    def closed_rows(self) -> tuple[int, ...]:
        """All closed neighborhoods; row i-1 is the domination-matrix row i."""
        return tuple(r | (1 << i) for i, r in enumerate(self.rows))

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Sorted edge list as (i, j) pairs with i < j."""
        out = []
        for i in range(1, self.n + 1):
            row = self.rows[i - 1] >> i  # neighbors greater than i
            j = i + 1
            while row:
                if row & 1:
                    out.append((i, j))
                row >>= 1
                j += 1
        return out

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.rows[u - 1] >> (v - 1) & 1)

    def _check(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise VertexOutOfRange(f"vertex {v} not in [1, {self.n}]")


def build_graph(p: Permutation) -> PermutationGraph:
    """Graph of p: edge {i, j}, i < j, exactly when the pair is inverted.

    >>> build_graph(Permutation((2, 3, 1))).edges()
    [(1, 2), (1, 3)]
    """
    n = p.n
    if n > MAX_GRAPH_ORDER:
        raise OrderTooLarge(f"n = {n} exceeds the {MAX_GRAPH_ORDER}-vertex cap")
    rows = [0] * n
    for i in range(1, n + 1):
        pi = p.position(i)
        for j in range(i + 1, n + 1):
            if pi > p.position(j):
                rows[i - 1] |= 1 << (j - 1)
                rows[j - 1] |= 1 << (i - 1)
    return PermutationGraph(n=n, rows=tuple(rows), source=p)


def closed_neighborhood(g: PermutationGraph, v: int) -> frozenset[int]:
    """N[v] = N(v) | {v}."""
    return vertices_of(g.closed_row(v))


def _prefix_split_points(p: Permutation) -> list[int]:
    """All k < n where the first k positions hold exactly the values 1..k."""
    out = []
    max_seen = 0
    for k, v in enumerate(p.image[:-1], start=1):
        max_seen = max(max_seen, v)
        if max_seen == k:
            out.append(k)
    return out


def is_connected(g: PermutationGraph) -> bool:
    """Connectivity by the prefix criterion: disconnected exactly when some
    proper prefix of the one-line notation is {1..k}."""
    return not _prefix_split_points(g.source)


def is_connected_search(g: PermutationGraph) -> bool:
    """Connectivity by plain breadth-first search; the independent check the
    prefix criterion is validated against."""
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        v = 1
        m = frontier
        while m:
            if m & 1:
                nxt |= g.rows[v - 1]
            m >>= 1
            v += 1
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask()


def components(g: PermutationGraph) -> list[tuple[int, Permutation]]:
    """Connected components in increasing vertex order.

    Each component occupies a run of consecutive values in consecutive
    positions; it is reported as (offset, tau) where tau is the induced
    permutation shifted down to start at 1.  Shifting each tau back up by
    its offset and concatenating reconstructs the source permutation.
    """
    p = g.source
    bounds = _prefix_split_points(p) + [p.n]
    out = []
    start = 0
    for end in bounds:
        block = tuple(v - start for v in p.image[start:end])
        out.append((start, Permutation(block)))
        start = end
    return out


def degree_bound_check(g: PermutationGraph) -> bool:
    """Displacement bound: every value's displacement |pos(i) - i| is at most
    its degree and has the same parity."""
    p = g.source
    for i in range(1, g.n + 1):
        d = g.degree(i)
        shift = p.position(i) - i
        if abs(shift) > d or (shift - d) % 2 != 0:
            return False
    return True
