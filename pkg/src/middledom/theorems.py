"""Executable forms of the bounds and identities for gamma(M(G)), and an
exhaustive certifier over all labeled graphs up to a given order."""

from __future__ import annotations

import os
from collections.abc import Callable, Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from math import comb

from middledom.errors import GraphError, HypothesisViolation
from middledom.graph import Graph, edge_mask
from middledom.solvers import (
    GammaResult,
    gamma_join_via_subsets,
    gamma_middle_fast,
    gamma_middle_oracle,
    min_edge_cover_bruteforce,
)
from middledom.transforms import corona_k1, corona_p2, join_empty, middle_graph

ENUMERATION_CAP = 7


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def dominates_middle(g: Graph, witness: Iterable[int]) -> bool:
    """Whether ``witness`` (in middle-graph numbering) dominates ``M(g)``.

    Works from the adjacency rules directly rather than through a
    constructed middle graph.
    """
    n = g.n
    incident = [0] * n
    for k, (a, b) in enumerate(g.edges):
        incident[a] |= 1 << (n + k)
        incident[b] |= 1 << (n + k)
    acc = 0
    for x in witness:
        if x < n:
            acc |= (1 << x) | incident[x]
        else:
            a, b = g.edges[x - n]
            acc |= (1 << a) | (1 << b) | incident[a] | incident[b]
    return acc == (1 << (n + g.m)) - 1


# -- enumeration ----------------------------------------------------------


def enumerate_graphs(
    n: int, connected_only: bool = False, cap: int = ENUMERATION_CAP
) -> Iterator[Graph]:
    """All labeled simple graphs on ``n`` vertices, in edge-mask order."""
    for _, g in enumerate_masked(n, connected_only, cap):
        yield g


def enumerate_masked(
    n: int,
    connected_only: bool = False,
    cap: int = ENUMERATION_CAP,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[tuple[int, Graph]]:
    if n > cap:
        raise GraphError(f"enumeration is capped at n = {cap}, got {n}")
    if n < 0:
        raise GraphError("n must be non-negative")
    total = 1 << comb(n, 2)
    for mask in range(start, total if stop is None else min(stop, total)):
        g = Graph.from_mask(n, mask)
        if connected_only and not g.is_connected():
            continue
        yield mask, g


# -- per-graph context ----------------------------------------------------


@dataclass
class SuiteConfig:
    corona_nmax: int = 4
    join_nmax: int = 5
    oracle_sample_rate: float = 0.01
    check_witnesses: bool = True

    @property
    def oracle_stride(self) -> int:
        return max(1, round(1 / self.oracle_sample_rate)) if self.oracle_sample_rate > 0 else 0


class GraphContext:
    """Lazily computed quantities shared by every predicate on one graph."""

    def __init__(self, g: Graph, mask: int | None = None, config: SuiteConfig | None = None):
        self.g = g
        self.n = g.n
        self.mask = edge_mask(g) if mask is None else mask
        self.config = config or SuiteConfig()
        self.witness_failures: list[dict] = []
        self._gammas: dict[Graph, int] = {}

    def gamma_of(self, h: Graph) -> int:
        """Fast-path ``gamma(M(h))``, with the witness checked when configured."""
        hit = self._gammas.get(h)
        if hit is not None:
            return hit
        res = gamma_middle_fast(h)
        if self.config.check_witnesses:
            self.check_witness(h, res)
        self._gammas[h] = res.value
        return res.value

    def check_witness(self, h: Graph, res: GammaResult) -> None:
        if len(res.witness) != res.value or not dominates_middle(h, res.witness):
            self.witness_failures.append(
                {"graph": graph_record(h), "gamma": res.value, "witness": list(res.labels)}
            )

    @cached_property
    def gamma(self) -> int:
        return self.gamma_of(self.g)

    @cached_property
    def complement(self) -> Graph:
        return self.g.complement()

    @cached_property
    def components(self) -> list[tuple[int, ...]]:
        return self.g.connected_components()

    @cached_property
    def connected(self) -> bool:
        return self.n >= 1 and len(self.components) == 1

    @cached_property
    def has_isolated(self) -> bool:
        return self.g.has_isolated_vertex()

    @cached_property
    def is_tree(self) -> bool:
        return self.connected and self.g.m == self.n - 1

    @cached_property
    def hamiltonian(self) -> bool:
        return self.g.has_hamiltonian_path()

    @property
    def lower(self) -> int:
        return _ceil_half(self.n)


def graph_record(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


# -- predicates -----------------------------------------------------------


@dataclass
class Check:
    failures: list[dict] = field(default_factory=list)
    sharp: list[tuple[str, dict]] = field(default_factory=list)
    notes: list[tuple[str, dict]] = field(default_factory=list)


@dataclass(frozen=True)
class TheoremPredicate:
    id: str
    anchor: str
    applies: Callable[[GraphContext], bool]
    check: Callable[[GraphContext], Check]
    observe: Callable[[GraphContext], Check] | None = None


def _tree_bounds(c: GraphContext) -> Check:
    out = Check()
    lo, hi = c.lower, c.n - 1
    if not lo <= c.gamma <= hi:
        out.failures.append({"gamma": c.gamma, "lower": lo, "upper": hi})
    if c.gamma == lo:
        out.sharp.append(("lower", {"gamma": c.gamma}))
    if c.gamma == hi:
        out.sharp.append(("upper", {"gamma": c.gamma}))
    return out


def _leaf_bound(c: GraphContext) -> Check:
    out = Check()
    leaves = len(c.g.leaves())
    if c.gamma < leaves:
        out.failures.append({"gamma": c.gamma, "leaves": leaves})
    elif c.gamma == leaves:
        out.sharp.append(("equality", {"gamma": c.gamma}))
    return out


def _leaf_applies(c: GraphContext) -> bool:
    # on K_2 both leaves share the one edge-vertex, so the bound fails there
    return c.n >= 3 and c.is_tree


def _leaf_outside(c: GraphContext) -> Check:
    out = Check()
    if c.n == 2 and c.is_tree:
        kind = "holds-on-K2" if c.gamma >= 2 else "fails-on-K2"
        out.notes.append((kind, {"gamma": c.gamma, "leaves": 2}))
    return out


def _diam3_applies(c: GraphContext) -> bool:
    return c.is_tree and c.n >= 4 and c.g.diameter() == 3


def _diam3(c: GraphContext) -> Check:
    out = Check()
    if c.gamma != c.n - 2:
        out.failures.append({"gamma": c.gamma, "expected": c.n - 2})
    return out


def _diam3_converse(c: GraphContext) -> Check:
    out = Check()
    if c.is_tree and c.n >= 4 and c.gamma == c.n - 2:
        out.notes.append(("converse-counterexample", {"gamma": c.gamma, "diameter": c.g.diameter()}))
    return out


def _general_bounds(c: GraphContext) -> Check:
    return _tree_bounds(c)


def _components_applies(c: GraphContext) -> bool:
    return c.n >= 2 and not c.has_isolated and len(c.components) >= 2


def _components(c: GraphContext) -> Check:
    out = Check()
    k = len(c.components) - 1
    bound = c.n - 1 - k
    if c.gamma > bound:
        out.failures.append({"gamma": c.gamma, "upper": bound, "components": k + 1})
    elif c.gamma == bound:
        out.sharp.append(("upper", {"gamma": c.gamma}))
    return out


def _components_outside(c: GraphContext) -> Check:
    out = Check()
    if c.n >= 2 and c.has_isolated and len(c.components) >= 2:
        bound = c.n - len(c.components)
        kind = "holds-with-isolated-vertex" if c.gamma <= bound else "fails-with-isolated-vertex"
        out.notes.append((kind, {"gamma": c.gamma, "upper": bound}))
    return out


def _edge_cover_identity(c: GraphContext) -> Check:
    out = Check()
    exact = gamma_middle_oracle(middle_graph(c.g))
    if c.config.check_witnesses:
        c.check_witness(c.g, exact)
    rho, _ = min_edge_cover_bruteforce(c.g)
    if not exact.value == rho == c.gamma:
        out.failures.append({"gamma_oracle": exact.value, "rho_bruteforce": rho, "gamma_fast": c.gamma})
    return out


def _vertex_deletion(c: GraphContext) -> Check:
    out = Check()
    for v in range(c.n):
        sub = c.gamma_of(c.g.delete_vertex(v))
        if not sub <= c.gamma <= sub + 1:
            out.failures.append({"vertex": v, "gamma": c.gamma, "gamma_deleted": sub})
        else:
            out.sharp.append(("lower" if sub == c.gamma else "upper", {}))
    return out


def _connected_upto(limit_attr: str) -> Callable[[GraphContext], bool]:
    def applies(c: GraphContext) -> bool:
        return c.n >= 2 and c.n <= getattr(c.config, limit_attr) and c.connected

    return applies


def _corona(c: GraphContext) -> Check:
    out = Check()
    value = c.gamma_of(corona_k1(c.g))
    if value != c.n:
        out.failures.append({"gamma_corona": value, "expected": c.n})
    return out


def _corona2(c: GraphContext) -> Check:
    out = Check()
    value = c.gamma_of(corona_p2(c.g))
    if value != c.n + c.gamma:
        out.failures.append({"gamma_corona2": value, "expected": c.n + c.gamma})
    return out


def _join_big_p(c: GraphContext) -> Check:
    out = Check()
    for p in range(c.n, 2 * c.n + 1):
        value = c.gamma_of(join_empty(c.g, p))
        if value != p:
            out.failures.append({"p": p, "gamma_join": value, "expected": p})
    return out


def _join_small_p(c: GraphContext) -> Check:
    out = Check()
    for p in range(1, c.n):
        value = c.gamma_of(join_empty(c.g, p))
        lo, hi = _ceil_half(c.n + p), c.n
        if not lo <= value <= hi:
            out.failures.append({"p": p, "gamma_join": value, "lower": lo, "upper": hi})
        if value == lo:
            out.sharp.append(("lower", {"p": p, "gamma": value}))
        if value == hi:
            out.sharp.append(("upper", {"p": p, "gamma": value}))
    return out


def _join_min_subsets(c: GraphContext) -> Check:
    out = Check()
    for p in range(1, c.n):
        direct = c.gamma_of(join_empty(c.g, p))
        via = gamma_join_via_subsets(c.g, p)
        if direct != via:
            out.failures.append({"p": p, "gamma_join": direct, "min_over_subsets": via})
    return out


def _star_applies(c: GraphContext) -> bool:
    return c.n >= 4 and c.connected


def _star(c: GraphContext) -> Check:
    out = Check()
    star = c.g.is_star()
    if (c.gamma == c.n - 1) != star:
        out.failures.append({"gamma": c.gamma, "is_star": star})
    if not star and c.gamma > c.n - 2:
        out.failures.append({"gamma": c.gamma, "corollary_upper": c.n - 2})
    if star:
        out.sharp.append(("star", {"gamma": c.gamma}))
    return out


def _ham_applies(c: GraphContext) -> bool:
    return c.n >= 2 and c.hamiltonian


def _ham(c: GraphContext) -> Check:
    out = Check()
    if c.gamma != c.lower:
        out.failures.append({"gamma": c.gamma, "expected": c.lower})
    return out


def _ham_converse(c: GraphContext) -> Check:
    out = Check()
    if c.n >= 2 and not c.hamiltonian and c.gamma == c.lower:
        out.notes.append(("converse-counterexample", {"gamma": c.gamma}))
    return out


def _ng_applies(c: GraphContext) -> bool:
    return c.n >= 2 and not c.has_isolated and not c.complement.has_isolated_vertex()


def _nordhaus(c: GraphContext) -> Check:
    out = Check()
    rep = nordhaus_values(c.n, c.gamma, c.gamma_of(c.complement))
    for name, b in rep["bounds"].items():
        if not b["holds"]:
            out.failures.append({"bound": name, **rep})
        if b["tight"]:
            out.sharp.append((name, {"sum": rep["sum"], "product": rep["product"]}))
    return out


def _oracle_sampled(c: GraphContext) -> bool:
    stride = c.config.oracle_stride
    return stride > 0 and c.mask % stride == 0


def _oracle_crosscheck(c: GraphContext) -> Check:
    out = Check()
    exact = gamma_middle_oracle(middle_graph(c.g))
    if c.config.check_witnesses:
        c.check_witness(c.g, exact)
    if exact.value != c.gamma:
        out.failures.append({"gamma_oracle": exact.value, "gamma_fast": c.gamma})
    return out


def _is_tree_n2(c: GraphContext) -> bool:
    return c.n >= 2 and c.is_tree


def _no_isolated_n2(c: GraphContext) -> bool:
    return c.n >= 2 and not c.has_isolated


PREDICATES: dict[str, TheoremPredicate] = {
    p.id: p
    for p in [
        TheoremPredicate("tree-bounds", "⌈n/2⌉ ≤ γ(M(T)) ≤ n−1", _is_tree_n2, _tree_bounds),
        TheoremPredicate(
            "leaf-bound", "tree, n ≥ 3 ⇒ γ(M(T)) ≥ |leaves(T)|", _leaf_applies, _leaf_bound, _leaf_outside
        ),
        TheoremPredicate(
            "diam3", "tree, n ≥ 4, diam(T) = 3 ⇒ γ(M(T)) = n−2", _diam3_applies, _diam3, _diam3_converse
        ),
        TheoremPredicate(
            "general-bounds", "no isolated vertex ⇒ ⌈n/2⌉ ≤ γ(M(G)) ≤ n−1", _no_isolated_n2, _general_bounds
        ),
        TheoremPredicate(
            "components-remark",
            "k+1 components, none trivial ⇒ γ(M(G)) ≤ n−1−k",
            _components_applies,
            _components,
            _components_outside,
        ),
        TheoremPredicate("edge-cover-identity", "γ(M(G))= ρ(G)", _no_isolated_n2, _edge_cover_identity),
        TheoremPredicate(
            "vertex-deletion",
            "γ(M(G∖v)) ≤ γ(M(G)) ≤ γ(M(G∖v))+1",
            lambda c: c.n >= 2,
            _vertex_deletion,
        ),
        TheoremPredicate("corona", "γ(M(G∘K_1))=n", _connected_upto("corona_nmax"), _corona),
        TheoremPredicate("corona2", "γ(M(G∘P_2))=n+γ(M(G))", _connected_upto("corona_nmax"), _corona2),
        TheoremPredicate("join-big-p", "γ(M(G+K̄_p))= p", _connected_upto("join_nmax"), _join_big_p),
        TheoremPredicate(
            "join-small-p", "⌈(n+p)/2⌉ ≤ γ(M(G+K̄_p)) ≤ n", _connected_upto("join_nmax"), _join_small_p
        ),
        TheoremPredicate(
            "join-min-subsets",
            "γ(M(G+K̄_p)) = p + min_{|A|=n−p} γ(M(G[A]))",
            _connected_upto("join_nmax"),
            _join_min_subsets,
        ),
        TheoremPredicate(
            "star-characterization",
            "connected, n ≥ 4: γ(M(G)) = n−1 ⇔ G ≅ K_{1,n−1}",
            _star_applies,
            _star,
        ),
        TheoremPredicate(
            "hamiltonian-path", "P_n ⊆ G ⇒ γ(M(G)) = ⌈n/2⌉", _ham_applies, _ham, _ham_converse
        ),
        TheoremPredicate(
            "nordhaus-gaddum",
            "2(n−2) ≥ γ(M(G))+γ(M(Ḡ)) ≥ 2⌈n/2⌉, (n−2)² ≥ γ(M(G))·γ(M(Ḡ)) ≥ ⌈n/2⌉²",
            _ng_applies,
            _nordhaus,
        ),
        TheoremPredicate(
            "oracle-crosscheck", "γ(M(G))= ρ(G)", _oracle_sampled, _oracle_crosscheck
        ),
    ]
}

WITNESS_VALIDITY = "witness-validity"


def nordhaus_values(n: int, gamma_g: int, gamma_c: int) -> dict:
    """Sum and product of the two domination numbers against the four bounds."""
    s, prod = gamma_g + gamma_c, gamma_g * gamma_c
    lo = _ceil_half(n)
    limits = {
        "sum-upper": (s, 2 * (n - 2), "le"),
        "sum-lower": (s, 2 * lo, "ge"),
        "product-upper": (prod, (n - 2) ** 2, "le"),
        "product-lower": (prod, lo**2, "ge"),
    }
    bounds = {}
    for name, (val, lim, op) in limits.items():
        bounds[name] = {
            "bound": lim,
            "holds": val <= lim if op == "le" else val >= lim,
            "tight": val == lim,
        }
    return {"n": n, "gamma": gamma_g, "gamma_complement": gamma_c, "sum": s, "product": prod, "bounds": bounds}


def nordhaus_gaddum(g: Graph, strict: bool = True) -> dict:
    """Nordhaus-Gaddum evaluation for ``g``.

    With ``strict`` a graph outside the hypotheses (an isolated vertex in
    ``g`` or its complement) raises :class:`HypothesisViolation`; otherwise
    the values are still computed and ``hypothesis`` records the failure.
    """
    if g.n < 2:
        raise HypothesisViolation("needs at least 2 vertices")
    comp = g.complement()
    reason = None
    if g.has_isolated_vertex():
        reason = f"G has isolated vertex {g.isolated_vertices()[0]}"
    elif comp.has_isolated_vertex():
        reason = f"the complement has isolated vertex {comp.isolated_vertices()[0]}"
    if reason and strict:
        raise HypothesisViolation(reason)
    rep = nordhaus_values(g.n, gamma_middle_fast(g).value, gamma_middle_fast(comp).value)
    rep["hypothesis"] = {"ok": reason is None, "reason": reason}
    return rep


# -- reports --------------------------------------------------------------


def _witness_key(kind: str, g: Graph, extra: dict) -> tuple:
    return (kind, g.n, g.m, tuple(sorted(g.degrees())), tuple(sorted((k, v) for k, v in extra.items() if k == "p")))


def _order_key(entry: dict) -> tuple:
    return (entry["n"], entry["mask"], entry.get("p", -1))


@dataclass
class PredicateReport:
    predicate_id: str
    anchor: str
    tested: int = 0
    not_applicable: int = 0
    violations: list[dict] = field(default_factory=list)
    sharpness_counts: dict[str, int] = field(default_factory=dict)
    sharpness_witnesses: dict[tuple, dict] = field(default_factory=dict)
    observation_counts: dict[str, int] = field(default_factory=dict)
    observations: dict[tuple, dict] = field(default_factory=dict)

    @staticmethod
    def _keep(store: dict, key: tuple, entry: dict) -> None:
        old = store.get(key)
        if old is None or _order_key(entry) < _order_key(old):
            store[key] = entry

    def add(self, c: GraphContext, res: Check) -> None:
        self.tested += 1
        for f in res.failures:
            self.violations.append({**graph_record(c.g), "mask": c.mask, **f})
        for kind, extra in res.sharp:
            self.sharpness_counts[kind] = self.sharpness_counts.get(kind, 0) + 1
            entry = {"bound": kind, **graph_record(c.g), "mask": c.mask, **extra}
            self._keep(self.sharpness_witnesses, _witness_key(kind, c.g, extra), entry)
        self.add_notes(c, res)

    def add_notes(self, c: GraphContext, res: Check) -> None:
        for kind, extra in res.notes:
            self.observation_counts[kind] = self.observation_counts.get(kind, 0) + 1
            entry = {"kind": kind, **graph_record(c.g), "mask": c.mask, **extra}
            self._keep(self.observations, _witness_key(kind, c.g, extra), entry)

    def merge(self, other: PredicateReport) -> None:
        self.tested += other.tested
        self.not_applicable += other.not_applicable
        self.violations.extend(other.violations)
        for mine, theirs in (
            (self.sharpness_counts, other.sharpness_counts),
            (self.observation_counts, other.observation_counts),
        ):
            for k, v in theirs.items():
                mine[k] = mine.get(k, 0) + v
        for mine, theirs in (
            (self.sharpness_witnesses, other.sharpness_witnesses),
            (self.observations, other.observations),
        ):
            for k, e in theirs.items():
                self._keep(mine, k, e)

    def to_json(self) -> dict:
        return {
            "predicate_id": self.predicate_id,
            "anchor": self.anchor,
            "tested": self.tested,
            "not_applicable": self.not_applicable,
            "violations": sorted(self.violations, key=lambda v: (v["n"], v["mask"], repr(sorted(v.items())))),
            "sharpness_counts": dict(sorted(self.sharpness_counts.items())),
            "sharpness_witnesses": [self.sharpness_witnesses[k] for k in sorted(self.sharpness_witnesses)],
            "observation_counts": dict(sorted(self.observation_counts.items())),
            "observations": [self.observations[k] for k in sorted(self.observations)],
        }


@dataclass
class TheoremReport:
    n_max: int
    connected_only: bool
    predicates: dict[str, PredicateReport]

    @property
    def total_violations(self) -> int:
        return sum(len(r.violations) for r in self.predicates.values())

    @property
    def ok(self) -> bool:
        return self.total_violations == 0

    def merge(self, other: TheoremReport) -> None:
        for pid, rep in other.predicates.items():
            if pid in self.predicates:
                self.predicates[pid].merge(rep)
            else:
                self.predicates[pid] = rep

    def verdict(self, predicate_id: str) -> str:
        rep = self.predicates[predicate_id]
        if rep.violations:
            return "violated"
        if rep.tested == 0:
            return "not-applicable"
        return f"certified up to n={self.n_max}"

    def to_json(self) -> dict:
        return {
            "schema_version": "1",
            "n_max": self.n_max,
            "connected_only": self.connected_only,
            "total_violations": self.total_violations,
            "predicates": [self.predicates[k].to_json() for k in self.predicates],
        }

    def table(self) -> str:
        head = f"{'predicate':<22} {'tested':>8} {'n/a':>8} {'viol':>5} {'sharp':>7}  verdict / anchor"
        lines = [head, "-" * len(head)]
        for pid, r in self.predicates.items():
            sharp = sum(r.sharpness_counts.values())
            lines.append(
                f"{pid:<22} {r.tested:>8} {r.not_applicable:>8} {len(r.violations):>5} {sharp:>7}  "
                f"{self.verdict(pid)} | {r.anchor}"
            )
            for kind, count in sorted(r.observation_counts.items()):
                lines.append(f"{'':<22} observed {kind}: {count}")
        status = "PASS" if self.ok else f"FAIL ({self.total_violations} violations)"
        lines.append(f"n_max={self.n_max}: {status}")
        return "\n".join(lines) + "\n"


def _empty_report(
    predicates: Sequence[TheoremPredicate], n_max: int, connected_only: bool
) -> TheoremReport:
    reps = {p.id: PredicateReport(p.id, p.anchor) for p in predicates}
    reps[WITNESS_VALIDITY] = PredicateReport(
        WITNESS_VALIDITY, "N[v] ∩ S ≠ ∅ for every vertex v"
    )
    return TheoremReport(n_max, connected_only, reps)


def _run_graph(report: TheoremReport, predicates, c: GraphContext) -> None:
    for p in predicates:
        rep = report.predicates[p.id]
        if p.applies(c):
            rep.add(c, p.check(c))
        else:
            rep.not_applicable += 1
            if p.observe is not None:
                rep.add_notes(c, p.observe(c))
    wv = report.predicates[WITNESS_VALIDITY]
    wv.tested += 1
    for f in c.witness_failures:
        wv.violations.append({**graph_record(c.g), "mask": c.mask, **f})


def check_all(
    g: Graph, predicates: Sequence[TheoremPredicate] | None = None, config: SuiteConfig | None = None
) -> TheoremReport:
    """Evaluate every applicable predicate on a single graph."""
    preds = list(PREDICATES.values()) if predicates is None else list(predicates)
    config = config or SuiteConfig(corona_nmax=g.n, join_nmax=g.n, oracle_sample_rate=1.0)
    report = _empty_report(preds, g.n, False)
    _run_graph(report, preds, GraphContext(g, config=config))
    return report


def check_one(predicate_id: str, g: Graph, config: SuiteConfig | None = None) -> str:
    """``"holds"``, ``"violated"`` or ``"not-applicable"``."""
    rep = check_all(g, [PREDICATES[predicate_id]], config).predicates[predicate_id]
    if rep.not_applicable:
        return "not-applicable"
    return "violated" if rep.violations else "holds"


def _chunk(args) -> TheoremReport:
    n, start, stop, pred_ids, connected_only, config, n_max = args
    preds = [PREDICATES[i] for i in pred_ids]
    report = _empty_report(preds, n_max, connected_only)
    for mask, g in enumerate_masked(n, connected_only, start=start, stop=stop):
        _run_graph(report, preds, GraphContext(g, mask, config))
    return report


def certify(
    n_max: int,
    connected_only: bool = False,
    predicates: Iterable[str | TheoremPredicate] | None = None,
    workers: int | None = 1,
    config: SuiteConfig | None = None,
    n_min: int = 1,
) -> TheoremReport:
    """Run the predicates over every labeled graph with ``n_min <= n <= n_max``.

    Custom :class:`TheoremPredicate` objects run in-process; registered ids
    may be spread over ``workers`` processes (``None`` means all cores). The
    merged report does not depend on the worker count.
    """
    if n_max > ENUMERATION_CAP:
        raise GraphError(f"certification is capped at n = {ENUMERATION_CAP}, got {n_max}")
    config = config or SuiteConfig()
    if predicates is None:
        preds = list(PREDICATES.values())
    else:
        preds = [p if isinstance(p, TheoremPredicate) else PREDICATES[p] for p in predicates]
    report = _empty_report(preds, n_max, connected_only)
    workers = (os.cpu_count() or 1) if workers is None else max(1, workers)
    registered = all(PREDICATES.get(p.id) is p for p in preds)

    if workers == 1 or not registered:
        for n in range(n_min, n_max + 1):
            for mask, g in enumerate_masked(n, connected_only):
                _run_graph(report, preds, GraphContext(g, mask, config))
        return report

    ids = [p.id for p in preds]
    tasks = []
    for n in range(n_min, n_max + 1):
        total = 1 << comb(n, 2)
        step = max(1, total // (workers * 8))
        for start in range(0, total, step):
            tasks.append((n, start, start + step, ids, connected_only, config, n_max))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_chunk, tasks):
            report.merge(part)
    return report
