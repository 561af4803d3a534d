"""Formula-versus-oracle cross checks.

Each check compares a counting formula, identity, or construction against
the exhaustive oracle (or the exact solver) over its stated range, capped by
a caller-supplied max_n so quick runs stay quick.  The acceptance test
suite and the `verify` CLI subcommand both run these.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import constructions, counting, oracle, sequences
from .domination import (
    count_singleton_dominators,
    domination_number_exact,
    heuristic_dominating_set,
    is_dominating,
    quick_rule_position_ends,
    quick_rule_value_ends,
    singleton_dominators_by_position,
)
from .graph import (
    build_graph,
    components,
    degree_bound_check,
    is_connected,
    is_connected_search,
)
from .perm import Permutation, reverse, strong_fixed_points


@dataclass(frozen=True)
class CheckResult:
    name: str
    range_note: str
    passed: bool
    first_mismatch: str | None = None
    detail: str | None = None


@dataclass
class VerificationRun:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 0 if all(c.passed for c in self.checks) else 3


class TallyCache:
    """Memoized oracle tallies shared across checks."""

    def __init__(self, jobs: int = 1):
        self.jobs = jobs
        self._tallies: dict[int, oracle.TallyReport] = {}

    def tally(self, n: int) -> oracle.TallyReport:
        if n not in self._tallies:
            self._tallies[n] = oracle.full_tally(n, jobs=self.jobs)
        return self._tallies[n]

    def c_table(self, max_n: int) -> counting.CountTable:
        table = counting.CountTable(kind="c")
        for n in range(1, max_n + 1):
            report = self.tally(n)
            for k, count in report.c.items():
                table.entries[(n, k)] = count
            if not report.c:
                table.entries[(n, 0)] = 0
        return table


def _result(name, range_note, mismatches, detail=None) -> CheckResult:
    return CheckResult(
        name=name,
        range_note=range_note,
        passed=not mismatches,
        first_mismatch=mismatches[0] if mismatches else None,
        detail=detail,
    )


def check_recursions_vs_oracle(cache: TallyCache, max_n: int) -> CheckResult:
    """g1(n) and f1(n, t) against the exhaustive tallies."""
    bad = []
    for n in range(1, max_n + 1):
        report = cache.tally(n)
        got = sum(v for k, v in report.g.items() if k == 1)
        if counting.g1(n) != got:
            bad.append(f"g1({n}): formula {counting.g1(n)} oracle {got}")
        for t in range(n + 1):
            if counting.f1(n, t) != report.f1.get(t, 0):
                bad.append(
                    f"f1({n},{t}): formula {counting.f1(n, t)}"
                    f" oracle {report.f1.get(t, 0)}"
                )
    return _result("recursions_vs_oracle", f"n <= {max_n}", bad)


def check_strong_fixed_point_identity(cache: TallyCache, max_n: int) -> CheckResult:
    """st(n, k) = f1(n, k) = oracle strong-fixed-point tally."""
    bad = []
    for n in range(1, max_n + 1):
        report = cache.tally(n)
        for k in range(n + 1):
            want = report.st.get(k, 0)
            if sequences.st(n, k) != want or report.f1.get(k, 0) != want:
                bad.append(f"St({n},{k})")
    return _result("strong_fixed_point_identity", f"n <= {max_n}", bad)


def check_closed_forms(max_k: int = 40) -> CheckResult:
    """Offset closed forms against the f1 recursion."""
    bad = []
    for r in (2, 3, 4, 5):
        for k in range(max_k + 1):
            if sequences.st_closed_form(r, k) != counting.f1(k + r, k):
                bad.append(f"St(k+{r},k) at k={k}")
    return _result("closed_forms_vs_recursion", f"r in 2..5, k <= {max_k}", bad)


def check_polynomial_lifting(max_k: int = 40) -> CheckResult:
    """Lifted polynomials: exact expected coefficients for offsets 3..5,
    recursion agreement at k = 1..max_k for offsets up to 7."""
    from fractions import Fraction

    bad = []
    families = sequences.lift_families(7)
    expected = {
        3: (3, 3),
        4: (14, Fraction(29, 2), Fraction(1, 2)),
        5: (77, 80, 3),
    }
    for r, coeffs in expected.items():
        got = families[r].polynomial.coefficients
        if tuple(got) != tuple(Fraction(c) for c in coeffs):
            bad.append(f"offset {r} coefficients {got}")
    for r in range(2, 8):
        fam = families[r]
        if fam.polynomial(0) != fam.k0_value:
            bad.append(f"offset {r} anchor")
        for k in range(1, max_k + 1):
            if fam.polynomial(k) != counting.f1(k + r, k):
                bad.append(f"offset {r} at k={k}")
                break
    return _result("polynomial_lifting", f"r <= 7, k <= {max_k}", bad)


def check_pair_counts(max_n: int) -> CheckResult:
    """Pair-domination formulas against a direct enumeration split."""
    bad = []
    for n in range(2, max_n + 1):
        # One pass over S_n, classifying every (u, v) at once.
        nonadj = {}
        adj = {}
        for p in oracle.iter_permutations(n):
            g = build_graph(p)
            rows = g.closed_rows()
            full = g.full_mask()
            for u in range(1, n + 1):
                for v in range(u + 1, n + 1):
                    if rows[u - 1] | rows[v - 1] != full:
                        continue
                    key = (u, v)
                    if g.has_edge(u, v):
                        adj[key] = adj.get(key, 0) + 1
                    else:
                        nonadj[key] = nonadj.get(key, 0) + 1
        for u in range(1, n + 1):
            for v in range(u + 1, n + 1):
                if counting.pair_count_nonadjacent(n, u, v) != nonadj.get((u, v), 0):
                    bad.append(f"nonadjacent ({n},{u},{v})")
                if counting.pair_count_adjacent(n, u, v) != adj.get((u, v), 0):
                    bad.append(f"adjacent ({n},{u},{v})")
    return _result("pair_counts_vs_oracle", f"n <= {max_n}, all u < v", bad)


def check_efficient_counts(max_n: int, max_size: int = 5) -> CheckResult:
    """Efficient-domination formula against a direct enumeration."""
    from itertools import combinations

    bad = []
    for n in range(2, max_n + 1):
        subsets = [
            a
            for size in range(2, min(max_size, n) + 1)
            for a in combinations(range(1, n + 1), size)
        ]
        seen = {a: 0 for a in subsets}
        for p in oracle.iter_permutations(n):
            g = build_graph(p)
            rows = g.closed_rows()
            full = g.full_mask()
            for a in subsets:
                cover = 0
                for v in a:
                    row = rows[v - 1]
                    if cover & row:
                        break
                    cover |= row
                else:
                    if cover == full:
                        seen[a] += 1
        for a in subsets:
            if counting.efficient_dom_count(n, a) != seen[a]:
                bad.append(f"efficient ({n},{a})")
    return _result(
        "efficient_counts_vs_oracle", f"n <= {max_n}, 2 <= |A| <= {max_size}", bad
    )


def check_singleton_formula(max_n: int) -> CheckResult:
    """(n-k)!(k-1)! against the per-k oracle tally."""
    bad = []
    for n in range(1, max_n + 1):
        tally = oracle.singleton_domination_tally(n)
        for k in range(1, n + 1):
            if counting.singleton_dom_count(n, k) != tally.get(k, 0):
                bad.append(f"singleton ({n},{k})")
    return _result("singleton_formula_vs_oracle", f"n <= {max_n}", bad)


def check_disconnected_formula(cache: TallyCache, max_n: int) -> CheckResult:
    """d(n, k) from connected counts, plus g = c + d pointwise."""
    bad = []
    for n in range(1, max_n + 1):
        report = cache.tally(n)
        ctab = cache.c_table(n - 1) if n > 1 else counting.CountTable(kind="c")
        ks = set(report.g) | set(report.d)
        for k in sorted(ks):
            want = report.d.get(k, 0)
            got = counting.disconnected_count(n, k, ctab) if n > 1 else 0
            if got != want:
                bad.append(f"d({n},{k}): formula {got} oracle {want}")
            if report.g.get(k, 0) != report.c.get(k, 0) + report.d.get(k, 0):
                bad.append(f"g=c+d at ({n},{k})")
    return _result("disconnected_formula_vs_oracle", f"n <= {max_n}", bad)


def check_combs(enumerate_n=(6, 8), construct_n=(10, 12)) -> CheckResult:
    """Comb uniqueness by enumeration at small even n, comb validity
    constructively at larger n."""
    bad = []
    for n in enumerate_n:
        found = oracle.connected_gamma_permutations(n, n // 2)
        expected = sorted([comb_image for comb_image in (
            constructions.comb_sigma(n).image,
            constructions.comb_tau(n).image,
        )])
        if sorted(p.image for p in found) != expected:
            bad.append(f"uniqueness at n={n}: found {len(found)}")
    for n in tuple(enumerate_n) + tuple(construct_n):
        for build in (constructions.comb_sigma, constructions.comb_tau):
            p = build(n)
            g = build_graph(p)
            if not is_connected(g):
                bad.append(f"{build.__name__}({n}) disconnected")
            if constructions.is_comb(g) is None:
                bad.append(f"{build.__name__}({n}) not a comb")
            if domination_number_exact(g).gamma != n // 2:
                bad.append(f"{build.__name__}({n}) gamma != {n // 2}")
    return _result(
        "comb_extremal_family", f"enumerated n in {tuple(enumerate_n)}, built up to 12", bad
    )


def random_connected_permutation(rng: random.Random, n: int) -> Permutation:
    """Uniform over permutations of [n] with a connected graph."""
    while True:
        image = list(range(1, n + 1))
        rng.shuffle(image)
        p = Permutation(tuple(image))
        if is_connected(build_graph(p)):
            return p


def check_extension(samples: int = 500, seed: int = 20260824) -> CheckResult:
    """Gamma-preserving insertion on seeded random connected inputs."""
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        n = rng.randint(3, 9)
        p = random_connected_permutation(rng, n)
        before = domination_number_exact(build_graph(p)).gamma
        q = constructions.extend_preserving_gamma(p)
        gq = build_graph(q)
        if not is_connected(gq) or domination_number_exact(gq).gamma != before:
            bad.append(f"extension failed for [{p}]")
    return _result("extension_preserves_gamma", f"{samples} seeded samples", bad)


def check_connected_with_gamma(max_n: int = 12) -> CheckResult:
    """Existence construction over the whole feasible (n, k) grid."""
    bad = []
    for n in range(2, max_n + 1):
        for k in range(1, n // 2 + 1):
            p = constructions.connected_with_gamma(n, k)
            g = build_graph(p)
            if p.n != n or not is_connected(g):
                bad.append(f"({n},{k}) wrong order or disconnected")
            elif domination_number_exact(g).gamma != k:
                bad.append(f"({n},{k}) wrong gamma")
    return _result("connected_with_gamma", f"n <= {max_n}, k <= n/2", bad)


def check_heuristic(max_n: int, soft_rate: float = 0.90) -> CheckResult:
    """Heuristic output always dominates; optimality rate reported with a
    soft gate (the clique procedure's tie-breaking is a free choice)."""
    bad = []
    rates = []
    for n in range(1, max_n + 1):
        q = oracle.heuristic_quality(n)  # asserts domination internally
        rates.append(f"n={n}: {q.optimal}/{q.total - q.excluded}")
        if q.rate < soft_rate:
            bad.append(f"rate {q.rate:.3f} below soft gate at n={n}")
    return _result(
        "heuristic_quality", f"n <= {max_n}", bad, detail="; ".join(rates)
    )


def check_invariant_suite(max_n: int) -> CheckResult:
    """Degree/parity bound, prefix-connectivity equivalence, component
    reconstruction, singleton-position characterization, and the
    strong-fixed-point reverse bijection, exhaustively."""
    bad = []
    for n in range(1, max_n + 1):
        for p in oracle.iter_permutations(n):
            g = build_graph(p)
            if not degree_bound_check(g):
                bad.append(f"degree bound [{p}]")
            if is_connected(g) != is_connected_search(g):
                bad.append(f"connectivity [{p}]")
            rebuilt = []
            for offset, tau in components(g):
                rebuilt.extend(v + offset for v in tau.image)
            if tuple(rebuilt) != p.image:
                bad.append(f"components [{p}]")
            direct = count_singleton_dominators(g)
            if direct != len(singleton_dominators_by_position(p)):
                bad.append(f"singleton characterization [{p}]")
            if direct != len(strong_fixed_points(reverse(p))):
                bad.append(f"reverse bijection [{p}]")
            if bad:
                return _result("invariant_suite", f"n <= {max_n}", bad)
    return _result("invariant_suite", f"n <= {max_n}", bad)


def run_all(max_n: int = 8, jobs: int = 1, samples: int = 500) -> VerificationRun:
    """Every formula-versus-oracle comparison, in a fixed order."""
    cache = TallyCache(jobs=jobs)
    n8 = min(max_n, 8)
    n7 = min(max_n, 7)
    run = VerificationRun()
    run.checks.append(check_recursions_vs_oracle(cache, n8))
    run.checks.append(check_strong_fixed_point_identity(cache, n8))
    run.checks.append(check_closed_forms())
    run.checks.append(check_polynomial_lifting())
    run.checks.append(check_pair_counts(n7))
    run.checks.append(check_efficient_counts(n7))
    run.checks.append(check_singleton_formula(n8))
    run.checks.append(check_disconnected_formula(cache, n8))
    if max_n >= 8:
        run.checks.append(check_combs())
    else:
        run.checks.append(check_combs(enumerate_n=(6,)))
    run.checks.append(check_extension(samples=samples))
    run.checks.append(check_connected_with_gamma())
    run.checks.append(check_heuristic(n8))
    run.checks.append(check_invariant_suite(n7))
    return run
