from itertools import combinations, permutations as perms

import pytest

from permdom.domination import (
    all_minimum_dominating_sets,
    classify_neighbors,
    count_singleton_dominators,
    domination_number_exact,
    heuristic_dominating_set,
    is_dominating,
    is_efficient_dominating,
    maximal_cliques,
    quick_rule_position_ends,
    quick_rule_value_ends,
    singleton_dominators_by_position,
)
from permdom.errors import NotDominating
from permdom.graph import build_graph, is_connected, vertices_of
from permdom.perm import Permutation, decreasing, identity, parse_permutation


def graph(text):
    return build_graph(parse_permutation(text))


def gamma_by_plain_enumeration(g):
    """Independent oracle: try every subset by ascending size, testing
    coverage with vertex sets instead of the domination-matrix rows."""
    nbhd = {v: set(g.neighbors(v)) | {v} for v in range(1, g.n + 1)}
    everything = set(range(1, g.n + 1))
    for size in range(1, g.n + 1):
        for combo in combinations(everything, size):
            if set().union(*(nbhd[v] for v in combo)) == everything:
                return size
    raise AssertionError


def test_is_dominating_examples():
    assert is_dominating(graph("2,3,1"), {1})
    assert not is_dominating(build_graph(identity(3)), {1, 2})
    g = graph("3,1,4,2")
    assert is_dominating(g, {1, 2, 3, 4})


def test_exact_solver_examples():
    r = domination_number_exact(build_graph(decreasing(5)))
    assert (r.gamma, r.witness) == (1, {1})
    r = domination_number_exact(build_graph(identity(4)))
    assert (r.gamma, r.witness) == (4, {1, 2, 3, 4})
    r = domination_number_exact(graph("3,1,4,2"))
    assert r.gamma == 2
    # lexicographically first minimum set of the path 1-3-2-4
    assert sorted(r.witness) == [1, 2]
    assert r.method == "exact"


@pytest.mark.parametrize("n", range(1, 7))
def test_exact_solver_matches_plain_enumeration(n):
    for image in perms(range(1, n + 1)):
        g = build_graph(Permutation(image))
        assert domination_number_exact(g).gamma == gamma_by_plain_enumeration(g)


@pytest.mark.parametrize("n", range(1, 8))
def test_gamma_of_connected_graphs_at_most_half_n(n):
    for image in perms(range(1, n + 1)):
        g = build_graph(Permutation(image))
        if is_connected(g) and n >= 2:
            assert domination_number_exact(g).gamma <= n // 2


def test_all_minimum_dominating_sets():
    assert all_minimum_dominating_sets(graph("2,1")) == [{1}, {2}]
    assert all_minimum_dominating_sets(graph("1,2")) == [{1, 2}]
    assert all_minimum_dominating_sets(graph("2,3,1")) == [{1}]


def test_singleton_dominator_examples():
    assert count_singleton_dominators(graph("3,2,1")) == 3
    assert count_singleton_dominators(graph("1,2,3")) == 0
    assert count_singleton_dominators(graph("2,3,1")) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_singleton_characterization_matches_direct_check(n):
    for image in perms(range(1, n + 1)):
        p = Permutation(image)
        g = build_graph(p)
        direct = {
            k for k in range(1, n + 1) if g.closed_row(k) == g.full_mask()
        }
        assert singleton_dominators_by_position(p) == direct
        assert count_singleton_dominators(g) == len(direct)


def test_classify_neighbors_path():
    cls = classify_neighbors(graph("3,1,4,2"), {2, 3})
    assert cls.shared == {2, 3}
    assert cls.private_of == {1: 3, 4: 2}


def test_classify_neighbors_trivial_cases():
    cls = classify_neighbors(build_graph(identity(3)), {1, 2, 3})
    assert cls.private_of == {1: 1, 2: 2, 3: 3}
    cls = classify_neighbors(graph("2,1"), {1})
    assert cls.private_of == {1: 1, 2: 1}
    with pytest.raises(NotDominating):
        classify_neighbors(build_graph(identity(3)), {1})


@pytest.mark.parametrize("n", range(2, 7))
def test_classification_partitions_dominated_graphs(n):
    for image in perms(range(1, n + 1)):
        g = build_graph(Permutation(image))
        d = domination_number_exact(g).witness
        cls = classify_neighbors(g, d)
        assert set(cls.private_of) | set(cls.shared) == set(range(1, n + 1))
        assert not set(cls.private_of) & cls.shared


def test_is_efficient_dominating_examples():
    assert is_efficient_dominating(graph("2,1,4,3"), {1, 3})
    assert not is_efficient_dominating(graph("2,1"), {1, 2})
    assert is_efficient_dominating(build_graph(identity(3)), {1, 2, 3})


def test_quick_rule_value_ends():
    r = quick_rule_value_ends(parse_permutation("3,1,5,4,2"))
    assert r is not None and (r.gamma, r.witness) == (2, {1, 5})
    assert r.method == "quick_rule_1n"
    assert quick_rule_value_ends(parse_permutation("1,2,3")) is None
    assert quick_rule_value_ends(parse_permutation("2,1")) is None


def test_quick_rule_position_ends():
    r = quick_rule_position_ends(parse_permutation("3,1,5,2,4"))
    assert r is not None and (r.gamma, r.witness) == (2, {3, 4})
    r = quick_rule_position_ends(parse_permutation("1,2"))
    assert r is not None and (r.gamma, r.witness) == (2, {1, 2})
    assert quick_rule_position_ends(parse_permutation("2,1")) is None


@pytest.mark.parametrize("n", range(2, 8))
def test_quick_rules_agree_with_exact_solver(n):
    for image in perms(range(1, n + 1)):
        p = Permutation(image)
        g = build_graph(p)
        for rule in (quick_rule_value_ends, quick_rule_position_ends):
            r = rule(p)
            if r is not None:
                assert r.gamma == domination_number_exact(g).gamma == 2
                assert is_dominating(g, r.witness)


def test_maximal_cliques_are_maximal_decreasing_subsequences():
    g = graph("3,1,4,2")
    cliques = {frozenset(vertices_of(c)) for c in maximal_cliques(g)}
    assert cliques == {frozenset({1, 3}), frozenset({2, 3}), frozenset({2, 4})}


def test_heuristic_examples():
    r = heuristic_dominating_set(build_graph(decreasing(4)))
    assert (r.gamma, r.witness) == (1, {1})
    r = heuristic_dominating_set(build_graph(identity(5)))
    assert r.witness == {1, 2, 3, 4, 5}
    r = heuristic_dominating_set(graph("3,1,4,2"))
    assert r.gamma >= 2 and is_dominating(graph("3,1,4,2"), r.witness)
    assert r.method == "heuristic"


@pytest.mark.parametrize("n", range(1, 8))
def test_heuristic_always_dominates_and_bounds_gamma(n):
    for image in perms(range(1, n + 1)):
        g = build_graph(Permutation(image))
        r = heuristic_dominating_set(g)
        assert is_dominating(g, r.witness)
        assert r.gamma >= domination_number_exact(g).gamma
