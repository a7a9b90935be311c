"""``middledom`` command line.

Exit codes: 0 ok, 1 theorem violation, 2 usage or parse error,
3 search budget exceeded, 4 input outside a result's hypotheses.
"""

from __future__ import annotations

import argparse
import json
import sys

from middledom import solvers
from middledom.errors import BudgetExceeded, GraphError, HypothesisViolation
from middledom.families import FamilySpec, generate
from middledom.io import ParseError, format_edge_list, load_graph
from middledom.theorems import ENUMERATION_CAP, PREDICATES, certify, nordhaus_gaddum
from middledom.transforms import (
    corona_k1,
    corona_p2,
    graph_to_dot,
    join_empty,
    line_graph,
    middle_graph,
    to_dot,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_HYPOTHESIS = 4


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def cmd_gamma(args, out) -> int:
    g = load_graph(args.input)
    budget = args.budget
    if args.middle:
        if args.method in ("auto", "matching"):
            res = solvers.gamma_middle_fast(g)
        elif args.method == "oracle":
            res = solvers.gamma_middle_oracle(middle_graph(g), budget)
        else:
            mg = middle_graph(g)
            raw = solvers.gamma_branch_bound(mg.graph, budget)
            res = solvers.GammaResult(raw.value, raw.witness, raw.method, tuple(mg.labels(raw.witness)))
    else:
        if args.method == "matching":
            raise UsageError("--method matching only applies to middle graphs")
        if args.method == "branch-bound":
            res = solvers.gamma_branch_bound(g, budget)
        else:
            res = solvers.gamma_oracle(g, budget)
    if args.json:
        payload = res.to_json()
        payload["middle"] = args.middle
        payload["input"] = args.input
        out.write(_dump(payload))
    else:
        witness = res.to_json()["witness"]
        out.write(f"gamma={res.value}\nmethod={res.method}\nwitness={' '.join(witness)}\n")
    return EXIT_OK


def cmd_transform(args, out) -> int:
    g = load_graph(args.input)
    op = args.op
    labels = None
    if op == "middle":
        mg = middle_graph(g)
        if args.format == "dot":
            out.write(to_dot(mg))
            return EXIT_OK
        h, labels = mg.graph, [mg.label(x) for x in range(mg.graph.n)]
    elif op == "line":
        h = line_graph(g)
        labels = ["m{}_{}".format(*e) for e in g.edges]
    elif op == "complement":
        h = g.complement()
    elif op == "corona":
        h = corona_k1(g)
    elif op == "corona2":
        h = corona_p2(g)
    elif op.startswith("join-empty:"):
        try:
            p = int(op.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad join size in {op!r}") from None
        if p < 0:
            raise UsageError("join size must be non-negative")
        h = join_empty(g, p)
    else:
        raise UsageError(f"unknown --op {op!r}")
    if args.format == "dot":
        out.write(graph_to_dot(h))
    else:
        out.write(format_edge_list(h, labels))
    return EXIT_OK


def cmd_certify(args, out) -> int:
    if args.nmax > ENUMERATION_CAP or args.nmax < 1:
        raise UsageError(f"--nmax must be between 1 and {ENUMERATION_CAP}")
    preds = None
    if args.predicates:
        preds = [p.strip() for p in args.predicates.split(",") if p.strip()]
        unknown = [p for p in preds if p not in PREDICATES]
        if unknown:
            raise UsageError(f"unknown predicate(s): {', '.join(unknown)}")
    report = certify(args.nmax, args.connected_only, preds, workers=args.workers)
    out.write(_dump(report.to_json()) if args.json else report.table())
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_nordhaus(args, out) -> int:
    g = load_graph(args.input)
    rep = nordhaus_gaddum(g, strict=False)
    hyp = rep["hypothesis"]
    if args.json:
        out.write(_dump({"schema_version": "1", **rep}))
    else:
        out.write(
            f"n={rep['n']}  gamma(M(G))={rep['gamma']}  gamma(M(co-G))={rep['gamma_complement']}\n"
            f"sum={rep['sum']}  product={rep['product']}\n"
        )
        for name, b in rep["bounds"].items():
            mark = "tight" if b["tight"] else ("slack" if b["holds"] else "VIOLATED")
            out.write(f"  {name:<14} {b['bound']:>5}  {mark}\n")
        if not hyp["ok"]:
            out.write(f"hypothesis not met: {hyp['reason']}; the bounds are not claimed here\n")
    if not hyp["ok"]:
        raise HypothesisViolation(hyp["reason"])
    return EXIT_OK


def cmd_generate(args, out) -> int:
    out.write(format_edge_list(generate(FamilySpec.parse(args.family))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="middledom", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", help="domination number of M(G) (or of G with --no-middle)")
    p.add_argument("input", help="edge-list file, '-' for stdin, or a family such as cycle:4")
    p.add_argument("--method", choices=["auto", "oracle", "matching", "branch-bound"], default="auto")
    p.add_argument("--middle", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--budget", type=int, default=None, help="search budget (default $MIDDLEDOM_BUDGET or 1e8)")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("transform", help="apply a graph construction")
    p.add_argument("input")
    p.add_argument("--op", required=True, help="middle|line|complement|corona|corona2|join-empty:P")
    p.add_argument("--format", choices=["dot", "edges"], default="edges")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("certify", help="check every predicate over all labeled graphs")
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--predicates", default=None, help="comma-separated predicate ids")
    p.add_argument("--workers", type=int, default=None, help="worker processes (default: all cores)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("nordhaus", help="Nordhaus-Gaddum sum and product for G and its complement")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_nordhaus)

    p = sub.add_parser("generate", help="print a family graph as an edge list")
    p.add_argument("family")
    p.set_defaults(func=cmd_generate)
    return ap


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ParseError) as exc:
        err.write(f"middledom: error: {exc}\n")
        return EXIT_USAGE
    except BudgetExceeded as exc:
        err.write(f"middledom: budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except HypothesisViolation as exc:
        err.write(f"middledom: hypothesis not met: {exc}\n")
        return EXIT_HYPOTHESIS
    except GraphError as exc:
        err.write(f"middledom: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
