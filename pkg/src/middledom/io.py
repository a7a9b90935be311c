"""Edge-list text format.

First non-comment line ``n m``, then ``m`` lines ``u v`` with 0-based
vertex indices. Lines starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

from middledom.errors import GraphError
from middledom.families import FamilySpec, generate
from middledom.graph import Graph


class ParseError(GraphError):
    pass


def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise ParseError("empty input: missing 'n m' header")
    _, n, m = rows[0]
    body = rows[1:]
    if n < 0 or m < 0:
        raise ParseError("header values must be non-negative")
    if len(body) != m:
        raise ParseError(f"header declares {m} edges but {len(body)} follow")
    try:
        return Graph(n, [(u, v) for _, u, v in body])
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_edge_list(g: Graph, labels: Sequence[str] | None = None) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    if labels is not None:
        lines.append("# labels: " + " ".join(labels))
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="ascii"))


def load_graph(source: str, stdin_text: str | None = None) -> Graph:
    """Family descriptor (contains ``:``), ``-`` for stdin, or a file path."""
    if source == "-":
        if stdin_text is None:
            import sys

            stdin_text = sys.stdin.read()
        return parse_edge_list(stdin_text)
    if ":" in source:
        try:
            return generate(FamilySpec.parse(source))
        except GraphError as exc:
            raise ParseError(str(exc)) from None
    try:
        return read_edge_list(source)
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from None
