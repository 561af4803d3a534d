"""Exhaustive ground truth over S_n.

Everything the counting formulas predict is re-derived here by enumerating
all n! permutations and measuring each graph directly.  Enumeration is in
lexicographic order; for parallel runs the rank space is split into
contiguous chunks whose tallies merge by addition, so any worker count
produces the identical report.
"""
from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice, permutations as iter_tuples
from math import factorial

from .counting import CountTable
from .domination import (
    count_singleton_dominators,
    domination_number_exact,
    heuristic_dominating_set,
    is_dominating,
    is_efficient_dominating,
    quick_rule_position_ends,
    quick_rule_value_ends,
)
from .errors import OrderCapExceeded
from .graph import build_graph, is_connected
from .perm import Permutation, strong_fixed_points

DEFAULT_CAP = 9
HARD_CAP = 11


@dataclass
class TallyReport:
    """Exact tallies over all of S_n."""

    n: int
    g: dict[int, int] = field(default_factory=dict)   # gamma -> count
    c: dict[int, int] = field(default_factory=dict)   # connected only
    d: dict[int, int] = field(default_factory=dict)   # disconnected only
    f1: dict[int, int] = field(default_factory=dict)  # singleton dominators
    st: dict[int, int] = field(default_factory=dict)  # strong fixed points
    elapsed: float = 0.0


def _check_cap(n: int, cap: int) -> None:
    if not 1 <= n <= cap:
        raise OrderCapExceeded(f"n = {n} outside the enumeration cap [1, {cap}]")


def rank_permutation(n: int, rank: int) -> Permutation:
    """The permutation at a given lexicographic rank (0-based)."""
    values = list(range(1, n + 1))
    image = []
    for i in range(n, 0, -1):
        q, rank = divmod(rank, factorial(i - 1))
        image.append(values.pop(q))
    return Permutation(tuple(image))


def iter_permutations(n: int, start: int = 0, stop: int | None = None):
    """Permutations of [n] in lexicographic order, as Permutation values."""
    chunk = islice(iter_tuples(range(1, n + 1)), start, stop)
    return (Permutation(t) for t in chunk)


def _tally_chunk(args) -> dict[str, Counter]:
    n, start, stop = args
    out = {key: Counter() for key in ("g", "c", "d", "f1", "st")}
    for p in iter_permutations(n, start, stop):
        g = build_graph(p)
        gamma = domination_number_exact(g).gamma
        out["g"][gamma] += 1
        if is_connected(g):
            out["c"][gamma] += 1
        else:
            out["d"][gamma] += 1
        out["f1"][count_singleton_dominators(g)] += 1
        out["st"][len(strong_fixed_points(p))] += 1
    return out


def full_tally(n: int, jobs: int = 1, cap: int = DEFAULT_CAP) -> TallyReport:
    """Tally gamma, connectivity, singleton dominators, and strong fixed
    points over all of S_n."""
    _check_cap(n, min(cap, HARD_CAP))
    started = time.perf_counter()
    total = factorial(n)
    if jobs <= 1:
        merged = _tally_chunk((n, 0, total))
    else:
        step = -(-total // jobs)
        chunks = [(n, lo, min(lo + step, total)) for lo in range(0, total, step)]
        merged = {key: Counter() for key in ("g", "c", "d", "f1", "st")}
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_tally_chunk, chunks):
                for key in merged:
                    merged[key].update(part[key])
    return TallyReport(
        n=n,
        g=dict(sorted(merged["g"].items())),
        c=dict(sorted(merged["c"].items())),
        d=dict(sorted(merged["d"].items())),
        f1=dict(sorted(merged["f1"].items())),
        st=dict(sorted(merged["st"].items())),
        elapsed=time.perf_counter() - started,
    )


def c_table(max_n: int, jobs: int = 1, cap: int = DEFAULT_CAP) -> CountTable:
    """Connected counts c(n, k) for all n <= max_n, from full tallies."""
    table = CountTable(kind="c")
    for n in range(1, max_n + 1):
        report = full_tally(n, jobs=jobs, cap=cap)
        for k, count in report.c.items():
            table.entries[(n, k)] = count
        if not report.c:  # keep the row visible even if empty
            table.entries[(n, 0)] = 0
    return table


def pair_tally(n: int, u: int, v: int, cap: int = DEFAULT_CAP) -> tuple[int, int]:
    """(nonadjacent, adjacent) counts of permutations whose graph is
    dominated by {u, v}."""
    _check_cap(n, min(cap, HARD_CAP))
    if not 1 <= u < v <= n:
        raise OrderCapExceeded(f"need 1 <= u < v <= n, got u={u}, v={v}, n={n}")
    nonadj = adj = 0
    for p in iter_permutations(n):
        g = build_graph(p)
        if not is_dominating(g, (u, v)):
            continue
        if g.has_edge(u, v):
            adj += 1
        else:
            nonadj += 1
    return nonadj, adj


def efficient_tally(n: int, a, cap: int = DEFAULT_CAP) -> int:
    """Permutations whose graph is efficiently dominated by the vertex
    list a."""
    _check_cap(n, min(cap, HARD_CAP))
    members = tuple(a)
    return sum(
        1
        for p in iter_permutations(n)
        if is_efficient_dominating(build_graph(p), members)
    )


def singleton_domination_tally(n: int, cap: int = DEFAULT_CAP) -> dict[int, int]:
    """For each k, the number of permutations whose graph has {k} as a
    dominating set."""
    _check_cap(n, min(cap, HARD_CAP))
    counts = Counter()
    for p in iter_permutations(n):
        g = build_graph(p)
        full = g.full_mask()
        for k, row in enumerate(g.closed_rows(), start=1):
            if row == full:
                counts[k] += 1
    return dict(sorted(counts.items()))


def connected_gamma_permutations(n: int, k: int, cap: int = DEFAULT_CAP):
    """All permutations of [n] with a connected graph of domination number
    k, in lexicographic order."""
    _check_cap(n, min(cap, HARD_CAP))
    out = []
    for p in iter_permutations(n):
        g = build_graph(p)
        if is_connected(g) and domination_number_exact(g).gamma == k:
            out.append(p)
    return out


@dataclass(frozen=True)
class HeuristicQuality:
    total: int
    excluded: int
    optimal: int

    @property
    def rate(self) -> float:
        considered = self.total - self.excluded
        return self.optimal / considered if considered else 1.0


def heuristic_quality(n: int, cap: int = 8) -> HeuristicQuality:
    """Run the hand heuristic over all of S_n.

    Permutations matched by either end-pattern quick rule are excluded;
    `optimal` counts the remaining ones where the heuristic set has minimum
    size.  Every heuristic output is also asserted to dominate.
    """
    _check_cap(n, min(cap, HARD_CAP))
    total = excluded = optimal = 0
    for p in iter_permutations(n):
        total += 1
        g = build_graph(p)
        result = heuristic_dominating_set(g)
        assert is_dominating(g, result.witness)
        if quick_rule_value_ends(p) or quick_rule_position_ends(p):
            excluded += 1
            continue
        if result.gamma == domination_number_exact(g).gamma:
            optimal += 1
    return HeuristicQuality(total=total, excluded=excluded, optimal=optimal)
