# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; semantics match middledom._pykernels exactly."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memset

cdef enum:
    FOUND = 0
    INFEASIBLE = 1
    OVER_BUDGET = 2

MAX_BITS = 64


def smallest_cover(masks, target, base, long k_min, long k_max, long long budget):
    cdef Py_ssize_t count = len(masks)
    cdef uint64_t t = target
    cdef uint64_t b = base
    cdef long long evals = 0
    cdef long k, i, j, top
    cdef uint64_t* m = <uint64_t*> malloc((count + 1) * sizeof(uint64_t))
    cdef long* idx = <long*> malloc((count + 1) * sizeof(long))
    cdef uint64_t* pref = <uint64_t*> malloc((count + 2) * sizeof(uint64_t))
    if m == NULL or idx == NULL or pref == NULL:
        free(m); free(idx); free(pref)
        raise MemoryError()
    try:
        for i in range(count):
            m[i] = masks[i]
        top = k_max if k_max < count else count
        for k in range(k_min, top + 1):
            for i in range(k):
                idx[i] = i
            pref[0] = b
            for i in range(k):
                pref[i + 1] = pref[i] | m[idx[i]]
            while True:
                evals += 1
                if evals > budget:
                    return OVER_BUDGET, None, evals - 1
                if pref[k] == t:
                    return FOUND, tuple(idx[i] for i in range(k)), evals
                i = k - 1
                while i >= 0 and idx[i] == count - k + i:
                    i -= 1
                if i < 0:
                    break
                idx[i] += 1
                pref[i + 1] = pref[i] | m[idx[i]]
                for j in range(i + 1, k):
                    idx[j] = idx[j - 1] + 1
                    pref[j + 1] = pref[j] | m[idx[j]]
        return INFEASIBLE, None, evals
    finally:
        free(m); free(idx); free(pref)


cdef int _lca(int* base, int* mate, int* parent, char* seen, int n, int a, int b) nogil:
    memset(seen, 0, n)
    while True:
        a = base[a]
        seen[a] = 1
        if mate[a] == -1:
            break
        a = parent[mate[a]]
    while True:
        b = base[b]
        if seen[b]:
            return b
        b = parent[mate[b]]


cdef void _mark_path(int* base, int* mate, int* parent, char* blossom,
                     int v, int b, int child) nogil:
    while base[v] != b:
        blossom[base[v]] = 1
        blossom[base[mate[v]]] = 1
        parent[v] = child
        child = mate[v]
        v = parent[mate[v]]


cdef int _find_augmenting(int n, int* off, int* nb, int* mate, int* parent, int* base,
                          char* used, char* blossom, char* seen, int* queue, int root) nogil:
    cdef int head = 0, tail = 0, v, to, cur, i, e
    for i in range(n):
        used[i] = 0
        parent[i] = -1
        base[i] = i
    used[root] = 1
    queue[tail] = root
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        for e in range(off[v], off[v + 1]):
            to = nb[e]
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = _lca(base, mate, parent, seen, n, v, to)
                memset(blossom, 0, n)
                _mark_path(base, mate, parent, blossom, v, cur, to)
                _mark_path(base, mate, parent, blossom, to, cur, v)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = 1
                            queue[tail] = i
                            tail += 1
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to
                used[mate[to]] = 1
                queue[tail] = mate[to]
                tail += 1
    return -1


cdef void _matching(int n, int* off, int* nb, int* mate, int* work) nogil:
    cdef int* parent = work
    cdef int* base = work + n
    cdef int* queue = work + 2 * n
    cdef char* used = <char*> (work + 3 * n)
    cdef char* blossom = used + n
    cdef char* seen = blossom + n
    cdef int root, v, pv, nxt
    for v in range(n):
        mate[v] = -1
    for root in range(n):
        if mate[root] != -1:
            continue
        v = _find_augmenting(n, off, nb, mate, parent, base, used, blossom, seen, queue, root)
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v] = pv
            mate[pv] = v
            v = nxt


def matching_mates(int n, adj):
    cdef Py_ssize_t total = 0
    cdef int v, k
    for v in range(n):
        total += len(adj[v])
    cdef int* off = <int*> malloc((n + 1) * sizeof(int))
    cdef int* nb = <int*> malloc((total + 1) * sizeof(int))
    cdef int* mate = <int*> malloc((n + 1) * sizeof(int))
    # parent, base, queue ints plus three byte arrays packed after them
    cdef int* work = <int*> malloc((4 * n + 4) * sizeof(int))
    if off == NULL or nb == NULL or mate == NULL or work == NULL:
        free(off); free(nb); free(mate); free(work)
        raise MemoryError()
    try:
        k = 0
        for v in range(n):
            off[v] = k
            for w in adj[v]:
                nb[k] = w
                k += 1
        off[n] = k
        with nogil:
            _matching(n, off, nb, mate, work)
        return [mate[v] for v in range(n)]
    finally:
        free(off); free(nb); free(mate); free(work)
