"""Immutable simple undirected graphs on dense integer vertices."""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Sequence
from typing import Optional

from middledom.errors import BudgetExceeded, DisconnectedGraphError, GraphError

Edge = tuple[int, int]

DEFAULT_PATH_BUDGET = 10**7


class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v``; the adjacency
    index holds sorted neighbor tuples. Instances are immutable and hashable.
    """

    __slots__ = ("n", "edges", "adjacency", "_edge_index", "_hash")

    def __init__(self, n: int, edge_list: Iterable[Sequence[int]] = ()) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        canon: set[Edge] = set()
        for pair in edge_list:
            u, v = (int(x) for x in pair)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            canon.add((u, v) if u < v else (v, u))
        edges = tuple(sorted(canon))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in nbrs))
        object.__setattr__(self, "_edge_index", {e: i for i, e in enumerate(edges)})
        object.__setattr__(self, "_hash", hash((n, edges)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Graph:
        """Graph whose edge set is selected by bit ``k`` of ``mask`` over
        the pairs of :func:`vertex_pairs` (lexicographic ``(u, v)``, ``u < v``)."""
        return cls(n, (pair for k, pair in enumerate(vertex_pairs(n)) if mask >> k & 1))

    @property
    def m(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0, {self.n})")

    # -- local structure -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def edge_index(self, u: int, v: int) -> int:
        """Position of edge ``uv`` in :attr:`edges`."""
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_index[key]
        except KeyError:
            raise GraphError(f"no edge {key}") from None

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(sorted((*self.adjacency[v], v)))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v, a in enumerate(self.adjacency) if len(a) == 1)

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, a in enumerate(self.adjacency) if not a)

    def has_isolated_vertex(self) -> bool:
        return any(not a for a in self.adjacency)

    # -- derived graphs --------------------------------------------------

    def complement(self) -> Graph:
        return Graph(self.n, (p for p in vertex_pairs(self.n) if p not in self._edge_index))

    def induced_subgraph(self, vertices: Iterable[int], return_map: bool = False):
        """Subgraph induced on ``vertices``, reindexed in increasing order.

        With ``return_map=True`` also returns the ``old -> new`` index map.
        """
        keep = sorted(set(vertices))
        if not keep:
            raise GraphError("induced subgraph needs a non-empty vertex set")
        for v in keep:
            self._check_vertex(v)
        new = {v: i for i, v in enumerate(keep)}
        sub = Graph(len(keep), ((new[u], new[v]) for u, v in self.edges if u in new and v in new))
        return (sub, new) if return_map else sub

    def delete_vertex(self, v: int) -> Graph:
        self._check_vertex(v)
        if self.n == 1:
            raise GraphError("deleting the only vertex leaves an empty vertex set")
        return self.induced_subgraph(u for u in range(self.n) if u != v)

    def disjoint_union(self, other: Graph) -> Graph:
        off = self.n
        return Graph(off + other.n, (*self.edges, *((u + off, v + off) for u, v in other.edges)))

    # -- connectivity and distances ---------------------------------------

    def bfs_distances(self, source: int) -> list[Optional[int]]:
        self._check_vertex(source)
        dist: list[Optional[int]] = [None] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if dist[w] is None:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def connected_components(self) -> list[tuple[int, ...]]:
        seen = [False] * self.n
        parts = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, part = [s], [s]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
                        part.append(w)
            parts.append(tuple(sorted(part)))
        return parts

    def is_connected(self) -> bool:
        return self.n >= 1 and len(self.connected_components()) == 1

    def distance(self, v: int, w: int) -> float:
        """Shortest-path length, ``math.inf`` when ``w`` is unreachable."""
        self._check_vertex(w)
        d = self.bfs_distances(v)[w]
        return math.inf if d is None else d

    def diameter(self) -> int:
        if not self.is_connected():
            raise DisconnectedGraphError("diameter is undefined on a disconnected graph")
        return max(max(self.bfs_distances(v)) for v in range(self.n))

    def is_tree(self) -> bool:
        return self.is_connected() and self.m == self.n - 1

    def is_star(self) -> bool:
        """True iff the graph is ``K_{1,n-1}`` for ``n >= 2``."""
        if self.n < 2 or self.m != self.n - 1:
            return False
        degs = sorted(self.degrees())
        return degs[-1] == self.n - 1 and all(d == 1 for d in degs[:-1])

    def hamiltonian_path(self, budget: int = DEFAULT_PATH_BUDGET) -> Optional[tuple[int, ...]]:
        return hamiltonian_path(self, budget)

    def has_hamiltonian_path(self, budget: int = DEFAULT_PATH_BUDGET) -> bool:
        return hamiltonian_path(self, budget) is not None


def vertex_pairs(n: int) -> list[Edge]:
    """All pairs ``(u, v)`` with ``u < v < n`` in lexicographic order."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def edge_mask(g: Graph) -> int:
    """Inverse of :meth:`Graph.from_mask`."""
    pos = {p: k for k, p in enumerate(vertex_pairs(g.n))}
    return sum(1 << pos[e] for e in g.edges)


def empty_graph(n: int) -> Graph:
    return Graph(n)


def hamiltonian_path(g: Graph, budget: int = DEFAULT_PATH_BUDGET) -> Optional[tuple[int, ...]]:
    """Depth-first search for a spanning path.

    Returns the lexicographically first path found, or ``None``. Each
    extension of a partial path consumes one unit of ``budget``.
    """
    n = g.n
    if n == 0:
        return None
    if n == 1:
        return (0,)
    if not g.is_connected():
        return None
    # at most two vertices may be path ends, and ends are exactly the degree-1 vertices
    ones = [v for v in range(n) if len(g.adjacency[v]) == 1]
    if len(ones) > 2:
        return None
    starts = ones if ones else range(n)

    adj = g.adjacency
    nodes = 0
    path: list[int] = []
    on_path = [False] * n

    def extend(u: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"hamiltonian path search exceeded {budget} nodes")
        path.append(u)
        on_path[u] = True
        if len(path) == n:
            return True
        for w in adj[u]:
            if not on_path[w] and extend(w):
                return True
        path.pop()
        on_path[u] = False
        return False

    for s in starts:
        if extend(s):
            return tuple(path)
    return None
