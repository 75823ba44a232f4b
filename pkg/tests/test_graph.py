import pytest
from hypothesis import given, strategies as st

from phigraph.generators import complete_graph, path_graph, star_graph
from phigraph.graph import (
    Graph,
    GraphError,
    GraphFormatError,
    degree_sequence,
    from_edge_list,
    induced_subgraph,
    to_edge_list,
)


def test_single_edge():
    g = from_edge_list("0 1")
    assert g.n == 2
    assert g.edges == ((0, 1),)
    assert g.degree == (1, 1)


def test_self_loop_reports_line():
    with pytest.raises(GraphFormatError, match="line 2.*self-loop"):
        from_edge_list("0 1\n0 0")


def test_duplicate_edge_reports_line():
    with pytest.raises(GraphFormatError, match="line 2.*duplicate") as info:
        from_edge_list("0 1\n1 0")
    assert info.value.line == 2


@pytest.mark.parametrize("text, line", [("0 1\n0 x\n", 2), ("0\n", 1), ("# c\n\n0 1 2\n", 3), ("0 -1\n", 1)])
def test_malformed_line(text, line):
    with pytest.raises(GraphFormatError) as info:
        from_edge_list(text)
    assert info.value.line == line


def test_comments_blank_lines_and_header():
    g = from_edge_list("# a comment\n\nn 5\n0 1\n  \n# more\n3 1\n")
    assert g.n == 5
    assert g.edges == ((0, 1), (1, 3))
    assert g.degree == (1, 2, 0, 1, 0)


def test_header_too_small():
    with pytest.raises(GraphFormatError, match="declared n=2"):
        from_edge_list("n 2\n0 3\n")


def test_gaps_keep_isolated_vertices():
    g = from_edge_list("0 4\n")
    assert g.n == 5
    assert g.degree == (1, 0, 0, 0, 1)


def test_direct_construction_validates():
    with pytest.raises(GraphError):
        Graph(3, ((0, 0),))
    with pytest.raises(GraphError):
        Graph(3, ((0, 1), (1, 0)))
    with pytest.raises(GraphError):
        Graph(2, ((0, 2),))


@pytest.mark.parametrize(
    "g, expected",
    [
        (path_graph(3), [1, 2, 1]),
        (complete_graph(4), [3, 3, 3, 3]),
        (star_graph(5), [5, 1, 1, 1, 1, 1]),
    ],
)
def test_degree_sequence(g, expected):
    assert degree_sequence(g) == expected
    assert sum(expected) == 2 * g.m


def test_induced_subgraph_examples():
    assert induced_subgraph(complete_graph(4), [0, 1, 2]) == complete_graph(3)
    empty = induced_subgraph(complete_graph(4), [])
    assert (empty.n, empty.m) == (0, 0)
    two = induced_subgraph(path_graph(3), [0, 2])
    assert (two.n, two.m) == (2, 0)


def test_induced_subgraph_relabels():
    g = Graph.from_edges([(0, 5), (5, 9), (2, 3)], n=10)
    h = induced_subgraph(g, [9, 5, 0, 5])
    assert h.edges == ((0, 1), (1, 2))


def test_induced_subgraph_rejects_bad_id():
    with pytest.raises(GraphError):
        induced_subgraph(path_graph(3), [0, 3])


edge_sets = st.integers(1, 12).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.sets(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1]),
            max_size=30,
        ),
    )
)


@given(edge_sets)
def test_graph_invariants(data):
    n, edges = data
    g = Graph(n, tuple(edges))
    assert sum(g.degree) == 2 * g.m
    for v in range(n):
        assert g.degree[v] == sum(1 for e in g.edges if v in e)
    assert list(g.edges) == sorted(g.edges)
    assert induced_subgraph(g, range(n)) == g


@given(edge_sets)
def test_round_trip(data):
    n, edges = data
    g = Graph(n, tuple(edges))
    assert from_edge_list(to_edge_list(g, ["comment"])) == g
