from itertools import permutations as perms

import pytest

from permdom.errors import OrderTooLarge, VertexOutOfRange
from permdom.graph import (
    build_graph,
    closed_neighborhood,
    components,
    degree_bound_check,
    is_connected,
    is_connected_search,
    mask_of,
    vertices_of,
)
from permdom.perm import Permutation, decreasing, identity, parse_permutation


def graph(text):
    return build_graph(parse_permutation(text))


def test_mask_round_trip():
    assert vertices_of(mask_of([1, 3, 6])) == {1, 3, 6}
    assert mask_of([]) == 0


def test_build_examples():
    assert graph("2,3,1").edges() == [(1, 2), (1, 3)]
    assert build_graph(identity(5)).edges() == []
    g = build_graph(decreasing(4))
    assert len(g.edges()) == 6  # complete graph


def test_edges_are_exactly_the_inversions():
    for image in perms(range(1, 6)):
        p = Permutation(image)
        g = build_graph(p)
        inversions = {
            (i, j)
            for i in range(1, 6)
            for j in range(i + 1, 6)
            if p.position(i) > p.position(j)
        }
        assert set(g.edges()) == inversions


def test_order_cap():
    with pytest.raises(OrderTooLarge):
        build_graph(identity(65))


def test_closed_neighborhood():
    assert closed_neighborhood(graph("2,3,1"), 1) == {1, 2, 3}
    assert closed_neighborhood(build_graph(identity(3)), 2) == {2}
    assert closed_neighborhood(build_graph(decreasing(4)), 3) == {1, 2, 3, 4}
    with pytest.raises(VertexOutOfRange):
        closed_neighborhood(graph("2,1"), 3)


def test_connectivity_examples():
    assert not is_connected(graph("1,3,2"))
    assert is_connected(graph("2,3,1"))
    assert is_connected(graph("1"))


@pytest.mark.parametrize("n", range(1, 8))
def test_prefix_criterion_matches_search(n):
    for image in perms(range(1, n + 1)):
        g = build_graph(Permutation(image))
        assert is_connected(g) == is_connected_search(g)


def test_components_examples():
    split = components(graph("2,1,4,3"))
    assert [(off, tau.image) for off, tau in split] == [(0, (2, 1)), (2, (2, 1))]
    assert [(o, t.image) for o, t in components(graph("2,3,1"))] == [(0, (2, 3, 1))]
    assert [(o, t.image) for o, t in components(graph("1,2"))] == [(0, (1,)), (1, (1,))]


@pytest.mark.parametrize("n", range(1, 8))
def test_components_reconstruct_the_permutation(n):
    for image in perms(range(1, n + 1)):
        g = build_graph(Permutation(image))
        rebuilt = []
        for offset, tau in components(g):
            assert is_connected(build_graph(tau))
            rebuilt.extend(v + offset for v in tau.image)
        assert tuple(rebuilt) == image


@pytest.mark.parametrize("n", range(1, 8))
def test_degree_displacement_bound_holds_everywhere(n):
    for image in perms(range(1, n + 1)):
        assert degree_bound_check(build_graph(Permutation(image)))


def test_build_is_injective_on_s5():
    seen = {}
    for image in perms(range(1, 6)):
        edges = tuple(build_graph(Permutation(image)).edges())
        assert edges not in seen, f"{image} vs {seen[edges]}"
        seen[edges] = image
