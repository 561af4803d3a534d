"""Extremal permutations: combs, the gamma-preserving insertion, and a
connected witness for every feasible domination number."""
from __future__ import annotations

from dataclasses import dataclass

from .domination import domination_number_exact
from .errors import (
    DisconnectedInput,
    InfeasibleGamma,
    OddOrder,
    OrderTooSmall,
)
from .graph import PermutationGraph, build_graph, is_connected
from .perm import Permutation, decreasing


@dataclass(frozen=True)
class CombWitness:
    """Partition of a comb: a path (spine), an independent set (teeth), and
    the perfect matching between them."""

    spine: frozenset[int]
    teeth: frozenset[int]
    matching: dict[int, int]  # spine vertex -> its leaf


def _piecewise(n: int, special: dict[int, int], residue_rules) -> Permutation:
    image = []
    for i in range(1, n + 1):
        if i in special:
            image.append(special[i])
        else:
            image.append(i + residue_rules[i % 4])
    return Permutation(tuple(image))


def _check_comb_order(n: int) -> None:
    if n % 2:
        raise OddOrder(f"comb order must be even, got {n}")
    if n < 6:
        raise OrderTooSmall(f"comb constructions need n >= 6, got {n}")


def comb_sigma(n: int) -> Permutation:
    """The comb permutation whose leaves are the values = 0 or 1 (mod 4).

    >>> str(comb_sigma(6))
    '3,1,4,6,2,5'
    """
    _check_comb_order(n)
    if n % 4 == 0:
        special = {1: 3, n: n - 2}
    else:
        special = {1: 3, n - 2: n}
    return _piecewise(n, special, {1: -3, 2: -1, 3: 1, 0: 3})


def comb_tau(n: int) -> Permutation:
    """The comb permutation whose leaves are the values = 2 or 3 (mod 4).

    >>> str(comb_tau(6))
    '2,5,1,3,6,4'
    """
    _check_comb_order(n)
    if n % 4 == 0:
        special = {3: 1, n - 2: n}
    else:
        special = {3: 1, n: n - 2}
    return _piecewise(n, special, {1: 1, 2: 3, 3: -3, 0: -1})


def is_comb(g: PermutationGraph) -> CombWitness | None:
    """Witness that g is a comb, or None.

    A comb on n vertices has n/2 leaves with pairwise distinct non-leaf
    neighbors, and the non-leaves induce a path.  The single-edge graph on
    two vertices counts as the degenerate comb (one-vertex spine).
    """
    n = g.n
    if n % 2:
        raise OddOrder(f"combs have even order, got {n}")
    if n == 0:
        return None
    if n == 2:
        if g.has_edge(1, 2):
            return CombWitness(frozenset({1}), frozenset({2}), {1: 2})
        return None

    leaves = [v for v in range(1, n + 1) if g.degree(v) == 1]
    if len(leaves) != n // 2:
        return None
    spine = frozenset(range(1, n + 1)) - frozenset(leaves)
    matching = {}
    for leaf in leaves:
        (nb,) = g.neighbors(leaf)
        if nb not in spine or nb in matching:
            return None
        matching[nb] = leaf
    if len(matching) != n // 2:
        return None
    # Spine must induce a path: degrees within the spine are 1,2,...,2,1 and
    # the spine is connected.
    spine_deg = {v: len(g.neighbors(v) & spine) for v in spine}
    ends = [v for v, d in spine_deg.items() if d == 1]
    if sorted(spine_deg.values()) != [1, 1] + [2] * (len(spine) - 2):
        return None
    seen = {ends[0]}
    frontier = [ends[0]]
    while frontier:
        nxt = []
        for v in frontier:
            for w in g.neighbors(v) & spine:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    if seen != spine:
        return None
    return CombWitness(spine=spine, teeth=frozenset(leaves), matching=matching)


def extend_preserving_gamma(p: Permutation) -> Permutation:
    """Insert n+1 immediately left of the right-most element of the
    canonical minimum dominating set; order grows by one, domination number
    and connectivity are preserved (and re-verified here).
    """
    g = build_graph(p)
    if not is_connected(g):
        raise DisconnectedInput(f"[{p}] has a disconnected graph")
    result = domination_number_exact(g)
    a = max(result.witness, key=p.position)
    pos = p.position(a)
    image = p.image[: pos - 1] + (p.n + 1,) + p.image[pos - 1 :]
    q = Permutation(image)

    gq = build_graph(q)
    assert is_connected(gq)
    assert domination_number_exact(gq).gamma == result.gamma
    return q


def connected_with_gamma(n: int, k: int) -> Permutation:
    """A permutation of order n whose graph is connected with domination
    number exactly k, for 1 <= k <= floor(n/2).

    Base cases: the all-inverted permutation for k = 1, the 4-vertex path
    for k = 2, and the sigma comb on 2k vertices for k >= 3; then repeated
    gamma-preserving insertions raise the order to n.
    """
    if k < 1 or k > n // 2:
        raise InfeasibleGamma(f"no connected graph on {n} vertices has gamma {k}")
    if k == 1:
        return decreasing(n)
    if k == 2:
        p = Permutation((3, 1, 4, 2))
    else:
        p = comb_sigma(2 * k)
    while p.n < n:
        p = extend_preserving_gamma(p)
    return p
