"""Independent brute-force oracles shared by the tests."""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np

from middledom.graph import Graph

INF = float("inf")


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    target = set(h.edges)
    for perm in permutations(range(g.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in g.edges):
            return True
    return False


def floyd_warshall(g: Graph) -> list[list[float]]:
    d = [[0 if i == j else INF for j in range(g.n)] for i in range(g.n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def adjacency_masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in nb) for nb in g.adjacency]


def max_matching_brute(g: Graph) -> int:
    """Size of a maximum matching by exhaustive branching on the lowest free vertex."""
    adj = adjacency_masks(g)

    def best(avail: int) -> int:
        if avail == 0:
            return 0
        low = avail & -avail
        v = low.bit_length() - 1
        rest = avail ^ low
        top = best(rest)
        cap = bin(avail).count("1") // 2
        nb = adj[v] & rest
        while nb and top < cap:
            w = nb & -nb
            nb ^= w
            top = max(top, 1 + best(rest ^ w))
        return top

    return best((1 << g.n) - 1)


def min_edge_cover_itertools(g: Graph) -> int:
    """Minimum edge cover by plain subset enumeration (no shared kernel)."""
    full = set(range(g.n))
    for k in range(g.m + 1):
        for combo in combinations(g.edges, k):
            if {x for e in combo for x in e} == full:
                return k
    raise ValueError("graph has an isolated vertex")


def gamma_unrestricted(g: Graph) -> int:
    """Minimum dominating set over all vertex subsets, via set comprehension."""
    closed = [set(g.adjacency[v]) | {v} for v in range(g.n)]
    full = set(range(g.n))
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            if set().union(*(closed[v] for v in combo)) == full:
                return k
    raise AssertionError("unreachable")


def dominating_table(g: Graph) -> np.ndarray:
    """Boolean array over all vertex subsets (as bitmasks): does the subset dominate?"""
    n = g.n
    dom = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        mk = (1 << v) | sum(1 << w for w in g.adjacency[v])
        dom[1 << v : 1 << (v + 1)] = dom[: 1 << v] | mk
    return dom == (1 << n) - 1


def minimal_dominating_sets(g: Graph) -> list[tuple[int, ...]]:
    table = dominating_table(g)
    idx = np.arange(1 << g.n)
    minimal = table.copy()
    for v in range(g.n):
        has = (idx >> v) & 1 == 1
        minimal &= ~has | ~table[idx ^ (1 << v)]
    return [tuple(v for v in range(g.n) if s >> v & 1) for s in np.flatnonzero(minimal)]
