import random

import pytest

from conftest import random_marked_graph, sample_graph
from lwcg.graph_model import (
    EdgeListGraph,
    GraphFormatError,
    canonical_edges,
    format_edge_list,
    parse_edge_list,
    preprocess,
)


def test_parse_smallest_graph():
    g = parse_edge_list("2 1 1 1\n1 1\n1 2 1 1\n")
    assert g.n == 2 and g.m == 1
    assert g.edges == ((1, 2, 1, 1),)


def test_parse_sample_graph_text(fig_graph):
    text = format_edge_list(fig_graph)
    g = parse_edge_list(text)
    assert g.n == 16
    assert g.m == 20
    assert g.sigma_e == 2 and g.sigma_v == 2
    assert canonical_edges(g) == canonical_edges(fig_graph)


def test_parse_comments_and_blank_lines():
    text = "# a comment\n\n2 1 2 2\n# marks\n1 2\n\n2 1 2 1\n"
    g = parse_edge_list(text)
    assert g.theta == (1, 2)
    assert g.edges == ((2, 1, 2, 1),)


@pytest.mark.parametrize("text,bad_line", [
    ("2 1 1 1\n1 1\n1 1 1 1\n", 3),        # self loop
    ("2 2 1 1\n1 1\n1 2 1 1\n2 1 1 1\n", 4),  # duplicate other orientation
    ("2 1 1 1\n1 3\n1 2 1 1\n", 2),        # vertex mark out of range
    ("2 1 1 1\n1 1\n1 2 2 1\n", 3),        # edge mark out of range
    ("2 1 1 1\n1 1\n1 3 1 1\n", 3),        # endpoint out of range
    ("2 1 1 1\n1 1\nx 2 1 1\n", 3),        # non-integer
])
def test_parse_errors_carry_line_numbers(text, bad_line):
    with pytest.raises(GraphFormatError) as exc:
        parse_edge_list(text)
    assert exc.value.line == bad_line


def test_parse_wrong_edge_count():
    with pytest.raises(GraphFormatError):
        parse_edge_list("2 2 1 1\n1 1\n1 2 1 1\n")


def test_preprocess_sample_vertex_5(fig_graph):
    nl = preprocess(fig_graph)
    assert nl.gamma[5] == (1, 13, 14)
    assert nl.x[5] == (1, 1, 1)
    assert nl.xp[5] == (2, 1, 1)
    assert nl.gammat[5] == (4, 1, 1)


def test_preprocess_orientation_free():
    a = EdgeListGraph(n=2, sigma_v=1, sigma_e=2, theta=(1, 1),
                      edges=((1, 2, 1, 2),))
    b = EdgeListGraph(n=2, sigma_v=1, sigma_e=2, theta=(1, 1),
                      edges=((2, 1, 2, 1),))
    assert preprocess(a) == preprocess(b)


def test_preprocess_record_shuffle_invariant():
    rng = random.Random(3)
    g = random_marked_graph(rng, 20, 0.3, 2, 2)
    edges = list(g.edges)
    rng.shuffle(edges)
    flipped = tuple((w, v, xp, x) if rng.random() < 0.5 else (v, w, x, xp)
                    for v, w, x, xp in edges)
    g2 = EdgeListGraph(n=g.n, sigma_v=g.sigma_v, sigma_e=g.sigma_e,
                       theta=g.theta, edges=flipped)
    assert preprocess(g) == preprocess(g2)


def test_preprocess_symmetry_invariants():
    rng = random.Random(7)
    for _ in range(20):
        g = random_marked_graph(rng, 30, rng.random() * 0.4, 3, 2)
        nl = preprocess(g)
        assert sum(nl.deg[1:]) == 2 * g.m
        # Adjacency-matrix oracle: record (v, w, x, xp) sets the mark
        # toward v to x and the mark toward w to xp.
        adj = {}
        for v, w, x, xp in g.edges:
            adj[(w, v)] = x
            adj[(v, w)] = xp
        for v in range(1, g.n + 1):
            assert list(nl.gamma[v]) == sorted(nl.gamma[v])
            assert len(set(nl.gamma[v])) == nl.deg[v]
            for i in range(nl.deg[v]):
                w = nl.gamma[v][i]
                j = nl.gammat[v][i] - 1
                assert nl.gamma[w][j] == v
                assert nl.x[v][i] == adj[(w, v)]
                assert nl.xp[v][i] == adj[(v, w)]
                assert nl.x[v][i] == nl.xp[w][j]


def test_roundtrip_to_text():
    rng = random.Random(13)
    for _ in range(10):
        g = random_marked_graph(rng, 15, 0.3, 3, 3)
        assert canonical_edges(parse_edge_list(format_edge_list(g))) == canonical_edges(g)


def test_sample_graph_matches_module_fixture(fig_graph):
    assert fig_graph == sample_graph()
