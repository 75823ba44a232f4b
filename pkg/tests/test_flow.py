import random

import pytest

from oracles import brute_min_cut, brute_orientable
from phigraph.density import mad
from phigraph.extremal import rootward_orientation
from phigraph.flow import (
    FlowNetwork,
    Orientation,
    max_flow,
    orient_bounded_outdegree,
    pseudoarboricity,
    verify_orientation,
)
from phigraph.generators import complete_graph, petersen_graph, random_tree, star_graph


def _net(n, arcs, s, t):
    net = FlowNetwork(n, s, t)
    for u, v, c in arcs:
        net.add_arc(u, v, c)
    return net


def test_single_arc():
    assert max_flow(_net(2, [(0, 1, 5)], 0, 1)).value == 5


def test_two_disjoint_paths():
    arcs = [(0, 1, 2), (1, 3, 2), (0, 2, 3), (2, 3, 3)]
    assert max_flow(_net(4, arcs, 0, 3)).value == 5


def test_diamond_bottleneck():
    arcs = [(0, 1, 10), (1, 2, 1), (2, 3, 10)]
    assert max_flow(_net(4, arcs, 0, 3)).value == 1


def test_rejects_negative_capacity():
    with pytest.raises(ValueError):
        FlowNetwork(2, 0, 1).add_arc(0, 1, -1)


@pytest.mark.parametrize("seed", range(60))
def test_max_flow_matches_min_cut_oracle(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 7)
    arcs = [
        (u, v, rng.randint(0, 6))
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < 0.45
    ]
    result = max_flow(_net(n, arcs, 0, n - 1))
    assert result.value == brute_min_cut(n, arcs, 0, n - 1)
    # capacity and conservation
    balance = [0] * n
    for (u, v, c), f in zip(arcs, result.flows):
        assert isinstance(f, int) and 0 <= f <= c
        balance[u] -= f
        balance[v] += f
    assert all(b == 0 for b in balance[1:-1])
    assert balance[n - 1] == result.value


def test_star_orientation():
    o = orient_bounded_outdegree(star_graph(5), 1)
    assert o is not None
    assert o.outdeg[0] == 0
    assert all(t != 0 for t, _ in o.arcs)


def test_k4_orientations():
    assert orient_bounded_outdegree(complete_graph(4), 1) is None
    o = orient_bounded_outdegree(complete_graph(4), 2)
    assert o is not None and o.max_outdegree() <= 2


def test_orientation_invariants(small_corpus):
    for g in small_corpus:
        o = orient_bounded_outdegree(g, max(1, g.max_degree()))
        assert sum(o.outdeg) == g.m
        assert all(a + b == d for a, b, d in zip(o.outdeg, o.indeg, g.degree))


def test_empty_graph_orientation():
    o = orient_bounded_outdegree(random_tree(1), 1)
    assert o.arcs == ()


def test_orientation_validates_arcs():
    g = complete_graph(3)
    with pytest.raises(ValueError):
        Orientation(g, ((0, 1),))
    with pytest.raises(ValueError):
        Orientation(g, ((0, 1), (0, 2), (0, 1)))


def test_hakimi_matches_enumeration(small_corpus):
    for g in small_corpus:
        if g.m > 14:
            continue
        for k in (1, 2, 3):
            assert (orient_bounded_outdegree(g, k) is not None) == brute_orientable(g.edges, g.n, k)


def test_hakimi_matches_mad(small_corpus):
    for g in small_corpus:
        for k in (1, 2, 3):
            assert (orient_bounded_outdegree(g, k) is not None) == (mad(g) <= 2 * k)


def test_monotone_in_k(small_corpus):
    for g in small_corpus:
        found = [orient_bounded_outdegree(g, k) is not None for k in range(1, 6)]
        assert found == sorted(found)


@pytest.mark.parametrize("g, expected", [(random_tree(30, 1), 1), (complete_graph(4), 2), (petersen_graph(), 2)])
def test_pseudoarboricity_examples(g, expected):
    assert pseudoarboricity(g) == expected


def test_pseudoarboricity_is_ceil_half_mad(small_corpus):
    for g in small_corpus:
        if g.m == 0:
            assert pseudoarboricity(g) == 0
            continue
        k = pseudoarboricity(g)
        assert k == -(-mad(g) // 2)
        assert orient_bounded_outdegree(g, k) is not None
        assert k == 1 or orient_bounded_outdegree(g, k - 1) is None


def test_verify_orientation_examples():
    tree = random_tree(25, 3)
    assert verify_orientation(rootward_orientation(tree), 1)
    k4 = complete_graph(4)
    assert verify_orientation(Orientation(k4, k4.edges), 3)
    s = star_graph(5)
    assert not verify_orientation(Orientation(s, s.edges), 1)


def test_format_is_normalized_edge_order():
    s = star_graph(2)
    o = orient_bounded_outdegree(s, 1)
    assert o.format() == "1 -> 0\n2 -> 0\n"
