"""Graph constructions: middle graph, line graph, coronas, joins with empty graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from middledom.graph import Graph


@dataclass(frozen=True)
class Original:
    v: int

    @property
    def label(self) -> str:
        return f"v{self.v}"


@dataclass(frozen=True)
class EdgeVertex:
    i: int
    j: int

    @property
    def label(self) -> str:
        return f"m{self.i}_{self.j}"


VertexProvenance = Union[Original, EdgeVertex]


@dataclass(frozen=True)
class MiddleGraph:
    """``M(G)`` together with its source graph and per-vertex provenance.

    Vertex ``v < n`` is ``Original(v)``; vertex ``n + k`` is the edge-vertex
    of ``source.edges[k]``.
    """

    graph: Graph
    source: Graph
    provenance: tuple[VertexProvenance, ...]

    @property
    def n_original(self) -> int:
        return self.source.n

    def is_original(self, x: int) -> bool:
        return x < self.source.n

    def edge_vertex(self, i: int, j: int) -> int:
        return self.source.n + self.source.edge_index(i, j)

    def edge_vertices(self) -> range:
        return range(self.source.n, self.graph.n)

    def label(self, x: int) -> str:
        return self.provenance[x].label

    def labels(self, xs) -> list[str]:
        return [self.provenance[x].label for x in xs]


def middle_graph(g: Graph) -> MiddleGraph:
    n = g.n
    edges = []
    for k, (i, j) in enumerate(g.edges):
        edges.append((i, n + k))
        edges.append((j, n + k))
    for v in range(n):
        incident = [n + g.edge_index(v, w) for w in g.adjacency[v]]
        for a in range(len(incident)):
            for b in range(a + 1, len(incident)):
                edges.append((incident[a], incident[b]))
    prov = tuple(Original(v) for v in range(n)) + tuple(EdgeVertex(i, j) for i, j in g.edges)
    return MiddleGraph(Graph(n + g.m, edges), g, prov)


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex ``k`` corresponds to ``g.edges[k]``."""
    edges = []
    for v in range(g.n):
        incident = [g.edge_index(v, w) for w in g.adjacency[v]]
        for a in range(len(incident)):
            for b in range(a + 1, len(incident)):
                edges.append((incident[a], incident[b]))
    return Graph(g.m, edges)


def corona_k1(g: Graph) -> Graph:
    """Pendant vertex ``n + i`` attached to every vertex ``i``."""
    n = g.n
    return Graph(2 * n, (*g.edges, *((i, n + i) for i in range(n))))


def corona_p2(g: Graph) -> Graph:
    """Path ``i - (n+i) - (2n+i)`` attached to every vertex ``i``."""
    n = g.n
    tails = []
    for i in range(n):
        tails.append((i, n + i))
        tails.append((n + i, 2 * n + i))
    return Graph(3 * n, (*g.edges, *tails))


def join_empty(g: Graph, p: int) -> Graph:
    """Join of ``g`` with the edgeless graph on ``p`` vertices (numbered ``n..n+p-1``)."""
    if p < 0:
        raise ValueError(f"p must be non-negative, got {p}")
    n = g.n
    return Graph(n + p, (*g.edges, *((v, n + j) for j in range(p) for v in range(n))))


def to_dot(mg: MiddleGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for x in range(mg.graph.n):
        if not mg.graph.adjacency[x]:
            lines.append(f"  {mg.label(x)};")
    for u, v in mg.graph.edges:
        lines.append(f"  {mg.label(u)} -- {mg.label(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for x in range(g.n):
        if not g.adjacency[x]:
            lines.append(f"  v{x};")
    for u, v in g.edges:
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
