import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ranked_communities import build_graph, parse_edge_list, ring_lattice, shortest_distances, strength
from ranked_communities.errors import (
    DuplicateEdge,
    IndexOutOfRange,
    InvalidParams,
    NonPositiveWeight,
    ParseError,
    SelfLoopError,
)
from ranked_communities.graph import LatticeParams, _from_arrays, read_edge_list, serialize_edge_list


def test_triangle():
    g = build_graph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert g.edge_count == 3
    assert all(len(g.neighbors(v)) == 2 for v in range(3))


def test_single_isolated_node():
    g = build_graph(1, [])
    assert g.node_count == 1 and g.edge_count == 0
    assert g.neighbors(0) == []


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (3, [(0, 1, 1), (1, 0, 2)], DuplicateEdge),
        (3, [(0, 3, 1)], IndexOutOfRange),
        (3, [(-1, 0, 1)], IndexOutOfRange),
        (3, [(0, 1, 0.0)], NonPositiveWeight),
        (3, [(0, 1, -2.0)], NonPositiveWeight),
        (3, [(1, 1, 1.0)], SelfLoopError),
    ],
)
def test_build_graph_rejects(n, edges, exc):
    with pytest.raises(exc):
        build_graph(n, edges)


def test_adjacency_symmetric():
    g = build_graph(4, [(0, 1, 2.0), (2, 1, 0.5), (3, 0, 1.5)])
    for v in range(4):
        for u, w in g.neighbors(v):
            assert (v, w) in g.neighbors(u)


def test_parse_weights_and_default():
    g = parse_edge_list("0 1 2.5\n1 2 1.0")
    assert g.node_count == 3
    assert sorted(g.edges()) == [(0, 1, 2.5), (1, 2, 1.0)]
    assert parse_edge_list("0 1").edges() == [(0, 1, 1.0)]


def test_parse_comments_blank_lines_and_stream():
    text = "# header\n\n0 1 2  # trailing\n  \n3 1\n"
    g = parse_edge_list(io.StringIO(text))
    assert g.node_count == 4
    assert sorted(g.edges()) == [(0, 1, 2.0), (1, 3, 1.0)]
    assert g.neighbors(2) == []


@pytest.mark.parametrize("text, line", [("0 x 1", 1), ("0 1\n1", 2), ("0 1 a", 1), ("0 -1", 1)])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_parse_propagates_build_errors():
    with pytest.raises(DuplicateEdge):
        parse_edge_list("0 1\n1 0")


def test_read_edge_list(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("0 1 3\n")
    assert read_edge_list(path).edges() == [(0, 1, 3.0)]


@st.composite
def graphs(draw):
    n = draw(st.integers(1, 9))
    pairs = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] < p[1])))
    weights = draw(st.lists(st.floats(1e-3, 1e3), min_size=len(pairs), max_size=len(pairs)))
    return n, [(u, v, w) for (u, v), w in zip(sorted(pairs), weights)]


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_serialize_roundtrip(data):
    n, edges = data
    g = build_graph(n, edges)
    back = parse_edge_list(serialize_edge_list(g))
    # trailing isolated nodes have no line to carry them
    assert sorted(back.edges()) == sorted(g.edges())


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_strength_sum_is_twice_total_weight(data):
    n, edges = data
    g = build_graph(n, edges)
    assert sum(strength(g, v) for v in range(n)) == pytest.approx(2 * g.total_weight, rel=1e-12)


def test_strength_examples():
    tri = build_graph(3, [(0, 1, 1.0), (1, 2, 3.0), (0, 2, 2.0)])
    assert strength(tri, 0) == 3.0
    assert strength(build_graph(2, []), 0) == 0.0
    loop = _from_arrays(2, np.array([0, 0]), np.array([0, 1]), np.array([2.0, 1.0]))
    assert strength(loop, 0) == 5.0
    assert loop.strengths()[0] == 5.0
    with pytest.raises(IndexOutOfRange):
        strength(tri, 3)


def test_ring_lattice_cycle():
    g = ring_lattice(LatticeParams(6, 1))
    assert g.edge_count == 6
    assert np.all(g.strengths() == 2.0)


def test_ring_lattice_nei2():
    g = ring_lattice(LatticeParams(6, 2))
    assert g.edge_count == 12
    assert np.all(g.strengths() == 4.0)
    assert set(g.weight) == {1.0}


@pytest.mark.parametrize("n, nei", [(6, 3), (2, 1), (10, 0), (7, 4)])
def test_ring_lattice_invalid(n, nei):
    with pytest.raises(InvalidParams):
        ring_lattice((n, nei))


@pytest.mark.parametrize("n, nei", [(7, 2), (9, 3), (12, 5), (50, 4)])
def test_ring_lattice_vertex_transitive(n, nei):
    g = ring_lattice((n, nei))
    assert g.edge_count == n * nei
    profiles = {
        (tuple(sorted(w for _, w in g.neighbors(v))), tuple(sorted(shortest_distances(g, v))))
        for v in range(n)
    }
    assert len(profiles) == 1


def test_ring_lattice_deterministic():
    assert ring_lattice((20, 3)) == ring_lattice((20, 3))
