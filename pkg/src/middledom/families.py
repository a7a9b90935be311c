"""Named graph families and closed-form values of gamma(M(G)) for them."""

from __future__ import annotations

import re
from collections.abc import Callable
from dataclasses import dataclass

from middledom.errors import GraphError, NotApplicable
from middledom.graph import Graph
from middledom.transforms import join_empty


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def star(n: int) -> Graph:
    """``K_{1,n}``: center 0, leaves ``1..n``."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return Graph(n + 1, ((0, i) for i in range(1, n + 1)))


def double_star(n: int) -> Graph:
    """``S_{1,n,n}``: center 0, middles ``1..n``, leaf ``n+i`` hanging off middle ``i``."""
    if n < 1:
        raise GraphError("double star needs n >= 1")
    edges = [(0, i) for i in range(1, n + 1)] + [(i, n + i) for i in range(1, n + 1)]
    return Graph(2 * n + 1, edges)


def wheel(n: int) -> Graph:
    """Rim ``C_n`` on ``0..n-1`` plus hub ``n`` (order ``n + 1``)."""
    if n < 3:
        raise GraphError("wheel needs a rim of at least 3 vertices")
    return join_empty(cycle(n), 1)


def wheel_order(n: int) -> Graph:
    """Wheel with ``n`` vertices in total: rim ``C_{n-1}`` plus hub ``n - 1``."""
    if n < 4:
        raise GraphError("a wheel of order n needs n >= 4")
    return wheel(n - 1)


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(n1: int, n2: int) -> Graph:
    """Parts ``0..n1-1`` and ``n1..n1+n2-1``."""
    if n1 < 1 or n2 < 1:
        raise GraphError("complete bipartite graph needs both parts non-empty")
    return Graph(n1 + n2, ((u, n1 + w) for u in range(n1) for w in range(n2)))


def friendship(n: int) -> Graph:
    """``F_n``: hub 0 and triangles ``0, 2i-1, 2i`` for ``i = 1..n``."""
    if n < 1:
        raise GraphError("friendship graph needs n >= 1")
    edges = [(0, i) for i in range(1, 2 * n + 1)]
    edges += [(2 * i - 1, 2 * i) for i in range(1, n + 1)]
    return Graph(2 * n + 1, edges)


GENERATORS: dict[str, tuple[int, Callable[..., Graph]]] = {
    "path": (1, path),
    "cycle": (1, cycle),
    "star": (1, star),
    "double_star": (1, double_star),
    "wheel": (1, wheel),
    "wheel_order": (1, wheel_order),
    "complete": (1, complete),
    "kbip": (2, complete_bipartite),
    "friendship": (1, friendship),
}

# kinds whose graph is a base family joined with an edgeless graph on p vertices
JOIN_BASES = ("star", "path", "cycle", "wheel", "complete")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse descriptors such as ``cycle:6``, ``kbip:2,3`` or ``star_join:3,2``."""
        m = re.fullmatch(r"\s*([a-z_]+)\s*:\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*", text)
        if not m:
            raise GraphError(f"malformed family descriptor {text!r}")
        kind = m.group(1)
        params = tuple(int(x) for x in m.group(2).split(","))
        spec = cls(kind, params)
        spec._arity()
        return spec

    def _arity(self) -> int:
        if self.kind in GENERATORS:
            arity = GENERATORS[self.kind][0]
        elif self.kind.endswith("_join") and self.kind[: -len("_join")] in JOIN_BASES:
            arity = 2
        else:
            raise GraphError(f"unknown family {self.kind!r}")
        if len(self.params) != arity:
            raise GraphError(f"{self.kind} takes {arity} parameter(s), got {len(self.params)}")
        return arity

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.params))}"


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    spec._arity()
    if spec.kind in GENERATORS:
        return GENERATORS[spec.kind][1](*spec.params)
    n, p = spec.params
    if p < 0:
        raise GraphError("join needs p >= 0")
    return join_empty(GENERATORS[spec.kind[: -len("_join")]][1](n), p)


@dataclass(frozen=True)
class FormulaEntry:
    key: str
    applies: Callable[..., bool]
    value: Callable[..., int]
    anchor: str
    domain: str


def _family_join_value(n: int, p: int) -> int:
    return _ceil_half(n + p)


FORMULAS: dict[str, FormulaEntry] = {
    e.key: e
    for e in [
        FormulaEntry("star", lambda n: n >= 1, lambda n: n, "γ(M(K_{1,n}))=n", "n >= 1"),
        FormulaEntry(
            "double_star", lambda n: n >= 2, lambda n: n + 1, "γ(M(S_{1,n,n}))=n+1", "n >= 2"
        ),
        FormulaEntry("path", lambda n: n >= 2, _ceil_half, "γ(M(P_n))=⌈n/2⌉", "n >= 2"),
        FormulaEntry(
            "cycle", lambda n: n >= 3, _ceil_half, "γ(M(C_n))=γ(M(W_n))=γ(M(K_n))=⌈n/2⌉", "n >= 3"
        ),
        FormulaEntry(
            "complete",
            lambda n: n >= 2,
            _ceil_half,
            "γ(M(C_n))=γ(M(W_n))=γ(M(K_n))=⌈n/2⌉",
            "n >= 2",
        ),
        # W_n is read as a wheel with n vertices in total; with a rim of n
        # vertices the same spanning-path argument gives ceil((n+1)/2).
        FormulaEntry(
            "wheel_order",
            lambda n: n >= 4,
            _ceil_half,
            "γ(M(C_n))=γ(M(W_n))=γ(M(K_n))=⌈n/2⌉",
            "n >= 4 (order n)",
        ),
        FormulaEntry(
            "wheel",
            lambda n: n >= 3,
            lambda n: _ceil_half(n + 1),
            "γ(M(C_n))=γ(M(W_n))=γ(M(K_n))=⌈n/2⌉",
            "rim n >= 3, order n + 1",
        ),
        FormulaEntry(
            "kbip",
            lambda n1, n2: n2 >= n1 >= 1,
            lambda n1, n2: n2,
            "γ(M(K_{n_1,n_2}))= n_2",
            "n2 >= n1 >= 1",
        ),
        FormulaEntry(
            "friendship", lambda n: n >= 2, lambda n: n + 1, "γ(M(F_n))= n+1", "n >= 2"
        ),
        # p == n is excluded: the join then has 2n+1 vertices and no isolated
        # vertex, so the value is at least n+1 (it is exactly n+1, see star_join_diagonal)
        FormulaEntry(
            "star_join",
            lambda n, p: n >= 1 and p >= 0 and p != n,
            lambda n, p: max(n, p),
            "γ(M(K_{1,n}+K̄_p))=max{n,p}",
            "n >= 1, p >= 0, p != n",
        ),
        FormulaEntry(
            "path_join",
            lambda n, p: n >= 3 and 0 <= p < n,
            _family_join_value,
            "γ(M(G+K̄_p))= ⌈(n+p)/2⌉",
            "n >= 3, p < n",
        ),
        FormulaEntry(
            "cycle_join",
            lambda n, p: n >= 3 and 0 <= p < n,
            _family_join_value,
            "γ(M(G+K̄_p))= ⌈(n+p)/2⌉",
            "n >= 3, p < n",
        ),
        FormulaEntry(
            "complete_join",
            lambda n, p: n >= 3 and 0 <= p < n,
            _family_join_value,
            "γ(M(G+K̄_p))= ⌈(n+p)/2⌉",
            "n >= 3, p < n",
        ),
        FormulaEntry(
            "wheel_join",
            lambda n, p: n >= 3 and 0 <= p < n,
            lambda n, p: _ceil_half(n + 1 + p),
            "γ(M(G+K̄_p))= ⌈(n+p)/2⌉",
            "rim n >= 3, p < n (order n + 1 + p)",
        ),
        # constructions over an arbitrary connected base graph of order n
        FormulaEntry("corona", lambda n: n >= 2, lambda n: n, "γ(M(G∘K_1))=n", "connected, n >= 2"),
        FormulaEntry(
            "corona2",
            lambda n, gamma_base: n >= 2,
            lambda n, gamma_base: n + gamma_base,
            "γ(M(G∘P_2))=n+γ(M(G))",
            "connected, n >= 2",
        ),
        FormulaEntry(
            "join_big_p",
            lambda n, p: n >= 2 and p >= n,
            lambda n, p: p,
            "γ(M(G+K̄_p))= p",
            "connected, n >= 2, p >= n",
        ),
    ]
}


def formula_gamma_middle(spec: FamilySpec | str, *params: int) -> int:
    """Closed-form ``gamma(M(G))``.

    Accepts a :class:`FamilySpec` (or its descriptor), or a construction key
    from :data:`FORMULAS` followed by its integer parameters. Raises
    :class:`NotApplicable` outside the stated domain.
    """
    if isinstance(spec, FamilySpec):
        key, params = spec.kind, spec.params
    elif ":" in spec:
        parsed = FamilySpec.parse(spec)
        key, params = parsed.kind, parsed.params
    else:
        key = spec
    entry = FORMULAS.get(key)
    if entry is None:
        raise NotApplicable(f"no closed form for {key!r}")
    try:
        ok = entry.applies(*params)
    except TypeError:
        raise NotApplicable(f"{key} takes different parameters than {params}") from None
    if not ok:
        raise NotApplicable(f"{key}{list(params)} outside the domain {entry.domain}")
    return entry.value(*params)


def star_join_diagonal(n: int) -> int:
    """Value of ``gamma(M(K_{1,n} + K̄_n))``: ``n + 1``."""
    return n + 1


def wheel_rim_reading(n: int) -> int:
    """``ceil(n/2)`` applied to a wheel whose rim has ``n`` vertices."""
    return _ceil_half(n)
