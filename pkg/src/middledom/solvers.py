"""Exact domination numbers, with a matching-based fast path for middle graphs.

The fast path rests on two facts: a minimum dominating set of ``M(G)`` can be
taken inside the edge-vertices, where it is exactly an edge cover of ``G``;
and the minimum edge cover of a graph without isolated vertices has size
``n - nu`` (Gallai), ``nu`` being the maximum matching size.
"""

from __future__ import annotations

import os
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from middledom import _backend
from middledom.errors import BudgetExceeded, GraphError, NotApplicable
from middledom.graph import Edge, Graph
from middledom.transforms import MiddleGraph, join_empty

DEFAULT_BUDGET = 10**8

ORACLE = "oracle"
BRANCH_BOUND = "branch_bound"
MATCHING = "matching_fast_path"
FORMULA = "formula"


def default_budget() -> int:
    raw = os.environ.get("MIDDLEDOM_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class GammaResult:
    value: int
    witness: tuple[int, ...]
    method: str
    labels: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "schema_version": "1",
            "gamma": self.value,
            "method": self.method,
            "witness": list(self.labels or (f"v{x}" for x in self.witness)),
        }


def _closed_masks(g: Graph) -> list[int]:
    masks = []
    for v, nbrs in enumerate(g.adjacency):
        mk = 1 << v
        for w in nbrs:
            mk |= 1 << w
        masks.append(mk)
    return masks


def is_dominating_set(g: Graph, s: Iterable[int]) -> bool:
    acc = 0
    masks = None
    for x in s:
        if not 0 <= x < g.n:
            raise GraphError(f"vertex {x} out of range [0, {g.n})")
        if masks is None:
            masks = _closed_masks(g)
        acc |= masks[x]
    return acc == (1 << g.n) - 1


def _search(masks, target, base, k_min, budget):
    status, combo, evals = _backend.smallest_cover(masks, target, base, k_min, len(masks), budget)
    if status == _backend.OVER_BUDGET:
        raise BudgetExceeded(f"exhaustive search exceeded {budget} candidate sets")
    if status == _backend.INFEASIBLE:
        raise GraphError("no covering subset exists")
    return combo


def gamma_oracle(g: Graph, budget: int | None = None) -> GammaResult:
    """Minimum dominating set of ``g`` by ordered subset enumeration.

    The witness is the lexicographically first set of minimum size.
    """
    budget = default_budget() if budget is None else budget
    if g.n == 0:
        return GammaResult(0, (), ORACLE)
    masks = _closed_masks(g)
    reach = max(len(a) for a in g.adjacency) + 1
    combo = _search(masks, (1 << g.n) - 1, 0, -(-g.n // reach), budget)
    return GammaResult(len(combo), tuple(combo), ORACLE)


def gamma_middle_oracle(mg: MiddleGraph, budget: int | None = None) -> GammaResult:
    """Exact ``gamma(M(G))`` searching only edge-vertex subsets.

    Isolated vertices of the source are isolated in ``M(G)`` too and are
    always included. Sizes are tried upward from ``ceil(n'/2)``, ``n'`` the
    number of non-isolated source vertices.
    """
    budget = default_budget() if budget is None else budget
    g, src = mg.graph, mg.source
    forced = src.isolated_vertices()
    masks = _closed_masks(g)
    base = 0
    for v in forced:
        base |= masks[v]
    edge_masks = masks[src.n:]
    k_min = -(-(src.n - len(forced)) // 2)
    combo = _search(edge_masks, (1 << g.n) - 1, base, k_min, budget)
    witness = tuple(forced) + tuple(src.n + k for k in combo)
    return GammaResult(len(witness), witness, ORACLE, tuple(mg.labels(witness)))


def gamma_branch_bound(g: Graph, budget: int | None = None) -> GammaResult:
    """Minimum dominating set by branch and bound.

    Branches on the undominated vertex with the fewest dominators, bounds by
    ``ceil(undominated / best single coverage)``, and starts from a greedy
    incumbent. One search node consumes one unit of ``budget``.
    """
    budget = default_budget() if budget is None else budget
    n = g.n
    if n == 0:
        return GammaResult(0, (), BRANCH_BOUND)
    masks = _closed_masks(g)
    full = (1 << n) - 1
    owners = [[w for w in range(n) if masks[w] >> u & 1] for u in range(n)]

    best: list[int] = []
    covered = 0
    while covered != full:
        w = max(range(n), key=lambda x: (bin(masks[x] & ~covered).count("1"), -x))
        best.append(w)
        covered |= masks[w]
    best = sorted(best)
    nodes = 0

    def visit(chosen: list[int], covered: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"branch and bound exceeded {budget} nodes")
        if covered == full:
            if len(chosen) < len(best):
                best = sorted(chosen)
            return
        open_ = full & ~covered
        gain = max(bin(mk & open_).count("1") for mk in masks)
        if len(chosen) + -(-bin(open_).count("1") // gain) >= len(best):
            return
        u = min(
            (v for v in range(n) if open_ >> v & 1),
            key=lambda v: (len(owners[v]), v),
        )
        order = sorted(owners[u], key=lambda w: (-bin(masks[w] & open_).count("1"), w))
        for w in order:
            chosen.append(w)
            visit(chosen, covered | masks[w])
            chosen.pop()

    visit([], 0)
    return GammaResult(len(best), tuple(best), BRANCH_BOUND)


def normalize_to_edge_set(mg: MiddleGraph, s: Iterable[int]) -> tuple[int, ...]:
    """Rewrite a dominating set of ``M(G)`` into one made of edge-vertices only.

    Each original vertex ``v`` in the set is dropped, and if some edge at
    ``v`` is not yet chosen, the smallest such edge replaces it. The result
    dominates and is no larger.
    """
    src = mg.source
    current = set(s)
    if not is_dominating_set(mg.graph, current):
        raise GraphError("input is not a dominating set of the middle graph")
    if src.has_isolated_vertex():
        raise GraphError(
            f"source graph has isolated vertex {src.isolated_vertices()[0]}; "
            "no edge-vertex set can dominate it"
        )
    for v in sorted(x for x in current if mg.is_original(x)):
        current.discard(v)
        incident = [mg.edge_vertex(v, w) for w in src.adjacency[v]]
        missing = [e for e in incident if e not in current]
        if missing:
            current.add(min(missing))
    return tuple(sorted(current))


def maximum_matching(g: Graph) -> tuple[Edge, ...]:
    mate = _backend.matching_mates(g.n, g.adjacency)
    return tuple((v, w) for v, w in enumerate(mate) if v < w)


def edge_cover_number(g: Graph) -> tuple[int, tuple[Edge, ...]]:
    """Minimum edge cover as ``(size, edges)``: a maximum matching plus the
    smallest-neighbor edge of every exposed vertex."""
    isolated = g.isolated_vertices()
    if isolated:
        raise GraphError(f"vertex {isolated[0]} is isolated; no edge cover exists")
    matching = maximum_matching(g)
    matched = {x for e in matching for x in e}
    cover = set(matching)
    for v in range(g.n):
        if v not in matched:
            w = g.adjacency[v][0]
            cover.add((v, w) if v < w else (w, v))
    return len(cover), tuple(sorted(cover))


def min_edge_cover_bruteforce(g: Graph, budget: int | None = None) -> tuple[int, tuple[Edge, ...]]:
    """Minimum edge cover by ordered enumeration of edge subsets."""
    budget = default_budget() if budget is None else budget
    isolated = g.isolated_vertices()
    if isolated:
        raise GraphError(f"vertex {isolated[0]} is isolated; no edge cover exists")
    masks = [(1 << u) | (1 << v) for u, v in g.edges]
    combo = _search(masks, (1 << g.n) - 1, 0, -(-g.n // 2), budget)
    return len(combo), tuple(g.edges[k] for k in combo)


def gamma_middle_fast(g: Graph) -> GammaResult:
    """``gamma(M(G))`` in polynomial time.

    Isolated vertices of ``g`` each contribute one forced vertex; the rest of
    the graph contributes its edge cover number. The witness uses the
    vertex numbering of :func:`middledom.transforms.middle_graph`.
    """
    n = g.n
    isolated = g.isolated_vertices()
    if isolated:
        keep = [v for v in range(n) if g.adjacency[v]]
        witness = list(isolated)
        if keep:
            sub, index = g.induced_subgraph(keep, return_map=True)
            _, cover = edge_cover_number(sub)
            back = {i: v for v, i in index.items()}
            witness += sorted(n + g.edge_index(back[a], back[b]) for a, b in cover)
    else:
        _, cover = edge_cover_number(g) if n else (0, ())
        witness = sorted(n + g.edge_index(a, b) for a, b in cover)
    labels = tuple(
        f"v{x}" if x < n else "m{}_{}".format(*g.edges[x - n]) for x in witness
    )
    return GammaResult(len(witness), tuple(witness), MATCHING, labels)


def gamma_join_via_subsets(g: Graph, p: int) -> int:
    """``p`` plus the smallest ``gamma(M(G[A]))`` over all ``A`` of size ``n - p``."""
    n = g.n
    if not 0 < p < n:
        raise NotApplicable(f"needs 0 < p < n, got p={p}, n={n}")
    if n < 2 or not g.is_connected():
        raise NotApplicable("needs a connected graph on at least 2 vertices")
    return p + min(
        gamma_middle_fast(g.induced_subgraph(a)).value for a in combinations(range(n), n - p)
    )


def gamma_join_direct(g: Graph, p: int) -> int:
    return gamma_middle_fast(join_empty(g, p)).value
