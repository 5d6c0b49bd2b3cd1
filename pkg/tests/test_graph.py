import numpy as np
import pytest
from hypothesis import given, strategies as st

from plgvc.graph import (GraphFormatError, MultiGraph, SimpleGraph, edge_census, format_graph,
                         induced_degree_stats, parse_graph, simplify, validate_cover)

from conftest import complete, path, star


def test_simplify_collapses_parallel_edges():
    s = simplify(MultiGraph.from_pairs(2, [(0, 1), (0, 1)]))
    assert s.adj == ((1,), (0,))
    assert s.loops == frozenset()


def test_simplify_strips_loop():
    s = simplify(MultiGraph.from_pairs(1, [(0, 0)]))
    assert s.adj == ((),)
    assert s.loops == {0}


def test_simplify_mixed():
    s = simplify(MultiGraph.from_pairs(3, [(0, 1), (1, 2), (2, 2)]))
    assert s.adj == ((1,), (0, 2), (1,))
    assert s.loops == {2}


def test_multigraph_degree_counts_loop_twice():
    g = MultiGraph.from_pairs(3, [(0, 1), (1, 2), (2, 2), (1, 0)])
    assert g.degrees().tolist() == [2, 3, 3]
    assert g.degree(2) == 3


def test_endpoint_out_of_range():
    with pytest.raises(ValueError):
        MultiGraph.from_pairs(2, [(0, 2)])


@pytest.mark.parametrize("y, expected", [((0, 1, 0), True), ((1, 0, 0), False), ((1, 0, 1), True)])
def test_validate_cover_path(y, expected):
    assert validate_cover(path(3), y) is expected


def test_validate_cover_needs_loop_vertex():
    g = SimpleGraph.from_edges(3, [(0, 1)], loops=[2])
    assert not validate_cover(g, (1, 0, 0))
    assert validate_cover(g, (1, 0, 1))


def test_validate_cover_size_mismatch():
    with pytest.raises(ValueError):
        validate_cover(path(3), (1, 1))


def test_degree_stats():
    assert induced_degree_stats(complete(3)) == {2: 3}
    assert induced_degree_stats(star(3)) == {1: 3, 3: 1}
    assert induced_degree_stats(SimpleGraph.from_edges(4, [])) == {0: 4}


pairs = st.integers(1, 12).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=40)))


@given(pairs)
def test_handshake_and_census(data):
    n, edges = data
    g = MultiGraph.from_pairs(n, edges)
    assert int(g.degrees().sum()) == 2 * g.m
    c = edge_census(g)
    assert c["m_simple"] + c["parallels"] + c["loops"] == c["m_multi"]
    s = simplify(g)
    assert s.m == c["m_simple"]
    for v, nbrs in enumerate(s.adj):
        assert v not in nbrs
        assert list(nbrs) == sorted(set(nbrs))
        for w in nbrs:
            assert v in s.adj[w]


@given(pairs)
def test_simplify_is_stable_on_simple_input(data):
    n, edges = data
    s = simplify(MultiGraph.from_pairs(n, edges))
    again = simplify(MultiGraph.from_pairs(n, s.edges()))
    assert again.adj == s.adj


@given(pairs)
def test_text_format_round_trip(data):
    n, edges = data
    g = MultiGraph.from_pairs(n, edges)
    text = format_graph(g)
    assert parse_graph(text) == g
    body = [tuple(map(int, line.split()[1:])) for line in text.splitlines()[1:]]
    assert body == sorted(body)


def test_format_example():
    g = MultiGraph.from_pairs(3, [(2, 2), (1, 0), (0, 1)])
    assert format_graph(g) == "p 3 3\ne 0 1\ne 0 1\ne 2 2\n"


@pytest.mark.parametrize("text", ["e 0 1\n", "p 2 2\ne 0 1\n", "p 2 1\ne 0 5\n", "p 2 1\nx 0 1\n", "p two 1\n"])
def test_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_induced_subgraph_relabels():
    g = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)], loops=[3])
    sub, keep = g.induced([1, 2, 3])
    assert keep == [1, 2, 3]
    assert sub.adj == ((1,), (0, 2), (1,))
    assert sub.loops == {2}
