"""Pure-Python kernels. ``_kernels.pyx`` mirrors these step for step."""

from __future__ import annotations

from itertools import combinations

FOUND = 0
INFEASIBLE = 1
OVER_BUDGET = 2


def smallest_cover(masks, target, base, k_min, k_max, budget):
    """Lexicographically first smallest index set whose masks, OR'd with
    ``base``, equal ``target``.

    Sizes ``k_min..k_max`` are tried in order; within a size, index tuples
    are visited in lexicographic order. Every visited tuple counts as one
    evaluation. Returns ``(status, indices, evaluations)``.
    """
    evaluations = 0
    count = len(masks)
    for k in range(k_min, min(k_max, count) + 1):
        for combo in combinations(range(count), k):
            evaluations += 1
            if evaluations > budget:
                return OVER_BUDGET, None, evaluations - 1
            acc = base
            for i in combo:
                acc |= masks[i]
            if acc == target:
                return FOUND, combo, evaluations
    return INFEASIBLE, None, evaluations


def matching_mates(n, adj):
    """Maximum-cardinality matching in a general graph by Edmonds' blossom
    contraction, one BFS per exposed root. ``adj[v]`` must be sorted.
    Returns ``mate`` with ``-1`` for exposed vertices.
    """
    mate = [-1] * n
    for root in range(n):
        if mate[root] != -1:
            continue
        end, parent = _find_augmenting(n, adj, mate, root)
        v = end
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v] = pv
            mate[pv] = v
            v = nxt
    return mate


def _find_augmenting(n, adj, mate, root):
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = [root]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = _lca(base, mate, parent, n, v, to)
                blossom = [False] * n
                _mark_path(base, mate, parent, blossom, v, cur, to)
                _mark_path(base, mate, parent, blossom, to, cur, v)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to, parent
                used[mate[to]] = True
                queue.append(mate[to])
    return -1, parent


def _lca(base, mate, parent, n, a, b):
    seen = [False] * n
    while True:
        a = base[a]
        seen[a] = True
        if mate[a] == -1:
            break
        a = parent[mate[a]]
    while True:
        b = base[b]
        if seen[b]:
            return b
        b = parent[mate[b]]


def _mark_path(base, mate, parent, blossom, v, b, child):
    while base[v] != b:
        blossom[base[v]] = True
        blossom[base[mate[v]]] = True
        parent[v] = child
        child = mate[v]
        v = parent[mate[v]]
