import pytest
from helpers import isomorphic
from hypothesis import given
from hypothesis import strategies as st

from middledom.families import complete, cycle, path, star
from middledom.graph import Graph, vertex_pairs
from middledom.theorems import enumerate_graphs
from middledom.transforms import (
    EdgeVertex,
    Original,
    corona_k1,
    corona_p2,
    graph_to_dot,
    join_empty,
    line_graph,
    middle_graph,
    to_dot,
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = vertex_pairs(n)
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_middle_k2_is_p3():
    mg = middle_graph(Graph(2, [(0, 1)]))
    assert mg.graph.edges == ((0, 2), (1, 2))
    assert mg.labels(range(3)) == ["v0", "v1", "m0_1"]
    assert isomorphic(mg.graph, path(3))


def test_middle_small_counts():
    p3 = middle_graph(path(3)).graph
    assert (p3.n, p3.m) == (5, 5)
    c3 = middle_graph(cycle(3)).graph
    assert (c3.n, c3.m) == (6, 9)


def test_middle_of_edgeless_graph():
    mg = middle_graph(Graph(3))
    assert mg.graph == Graph(3)
    assert list(mg.edge_vertices()) == []


def test_provenance(c4):
    mg = middle_graph(c4)
    assert mg.provenance[:4] == tuple(Original(v) for v in range(4))
    assert mg.provenance[4:] == tuple(EdgeVertex(i, j) for i, j in c4.edges)
    assert mg.edge_vertex(0, 3) == 4 + c4.edges.index((0, 3))
    assert mg.edge_vertex(3, 0) == mg.edge_vertex(0, 3)
    assert mg.is_original(3) and not mg.is_original(4)
    assert mg.n_original == 4


@pytest.mark.parametrize("n", range(0, 7))
def test_middle_graph_structure_exhaustive(n):
    for g in enumerate_graphs(n) if n else [Graph(0)]:
        mg = middle_graph(g)
        h = mg.graph
        lg = line_graph(g)
        assert h.n == n + g.m
        assert h.m == 2 * g.m + lg.m
        # originals are independent
        assert all(not (u < n and v < n) for u, v in h.edges)
        # edge-vertex adjacency by rule
        for k, (i, j) in enumerate(g.edges):
            expect = {i, j} | {n + t for t, e in enumerate(g.edges) if t != k and set(e) & {i, j}}
            assert set(h.adjacency[n + k]) == expect
        # L(G) is the induced subgraph on edge-vertices, with identical numbering
        sub = h.induced_subgraph(range(n, n + g.m)) if g.m else Graph(0)
        assert sub.edges == lg.edges


def test_line_graph_examples():
    assert line_graph(path(3)) == Graph(2, [(0, 1)])
    assert line_graph(star(3)) == complete(3)
    for n in range(3, 9):
        assert isomorphic(line_graph(cycle(n)), cycle(n))


def test_corona_examples(c4):
    assert corona_k1(Graph(1)) == Graph(2, [(0, 1)])
    g = corona_k1(c4)
    assert (g.n, g.m) == (8, 8)
    assert isomorphic(corona_k1(Graph(2, [(0, 1)])), path(4))


def test_corona_p2_examples():
    assert corona_p2(Graph(1)) == Graph(3, [(0, 1), (1, 2)])
    g = corona_p2(Graph(2, [(0, 1)]))
    assert (g.n, g.m) == (6, 5)
    g = corona_p2(cycle(3))
    assert (g.n, g.m) == (9, 9)
    for i in range(3):
        assert g.has_edge(i, 3 + i) and g.has_edge(3 + i, 6 + i)
        assert g.degree(6 + i) == 1


def test_join_examples(c4):
    assert join_empty(Graph(1), 1) == Graph(2, [(0, 1)])
    g = join_empty(c4, 2)
    assert (g.n, g.m) == (6, 12)
    assert join_empty(c4, 0) == c4
    with pytest.raises(ValueError):
        join_empty(c4, -1)


def test_star_join_middle_edge_vertices():
    # edges of K_{1,n} + K̄_p: the n spokes plus n*p and p join edges
    n, p = 3, 2
    g = join_empty(star(n), p)
    assert g.m == n + (n + 1) * p
    mg = middle_graph(g)
    assert len(mg.edge_vertices()) == g.m


@given(graphs())
def test_corona_k1_adds_one_leaf_per_vertex(g):
    h = corona_k1(g)
    assert h.n == 2 * g.n
    assert all(h.degree(v) == g.degree(v) + 1 for v in range(g.n))
    assert all(h.neighbors(g.n + v) == (v,) for v in range(g.n))


@given(graphs(), st.integers(min_value=0, max_value=5))
def test_join_empty_new_vertex_degrees(g, p):
    h = join_empty(g, p)
    assert h.n == g.n + p
    assert all(h.degree(g.n + j) == g.n for j in range(p))
    if g.n:
        assert h.induced_subgraph(range(g.n)) == g


@given(graphs())
def test_middle_graph_invariants(g):
    mg = middle_graph(g)
    assert mg.graph.n == g.n + g.m
    assert mg.graph.m == 2 * g.m + line_graph(g).m
    assert [mg.label(x) for x in range(g.n)] == [f"v{v}" for v in range(g.n)]


def test_dot_output(c4):
    dot = to_dot(middle_graph(Graph(2, [(0, 1)])))
    assert dot == "graph G {\n  v0 -- m0_1;\n  v1 -- m0_1;\n}\n"
    dot = to_dot(middle_graph(Graph(3, [(0, 1)])))
    assert "  v2;\n" in dot
    assert graph_to_dot(c4).count("--") == 4
    assert to_dot(middle_graph(c4)) == to_dot(middle_graph(cycle(4)))
