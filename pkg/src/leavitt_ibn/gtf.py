"""GTF, the plain-text graph format used by the CLI.

Directives, one per line ('#' starts a comment anywhere):

    vertex <name>
    edge <id> <src> <dst>
    edges <src> <dst> <k>     # k parallel edges named <src>__<dst>__1..k

Names are tokens of letters, digits and underscore.  Endpoints must be
declared before use; nothing is auto-created.  Repeated `edges` lines for
the same pair continue the numbering.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .graph_core import Graph, build_graph

_TOKEN = re.compile(r"[A-Za-z0-9_]+\Z")


def _token(lineno: int, what: str, value: str) -> str:
    if not _TOKEN.match(value):
        raise ParseError(lineno, f"{what} {value!r} is not a token (letters/digits/_)")
    return value


def parse_gtf(text: str) -> Graph:
    vertices: list[str] = []
    edges: list[tuple[str, str, str]] = []
    anon_counter: dict[tuple[str, str], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        directive = parts[0]
        if directive == "vertex":
            if len(parts) != 2:
                raise ParseError(lineno, "vertex takes exactly one name")
            vertices.append(_token(lineno, "vertex name", parts[1]))
        elif directive == "edge":
            if len(parts) != 4:
                raise ParseError(lineno, "edge takes id, source, range")
            eid, src, dst = (
                _token(lineno, "edge id", parts[1]),
                _token(lineno, "vertex name", parts[2]),
                _token(lineno, "vertex name", parts[3]),
            )
            edges.append((eid, src, dst))
        elif directive == "edges":
            if len(parts) != 4:
                raise ParseError(lineno, "edges takes source, range, count")
            src = _token(lineno, "vertex name", parts[1])
            dst = _token(lineno, "vertex name", parts[2])
            try:
                k = int(parts[3])
            except ValueError:
                k = -1
            if k < 1:
                raise ParseError(lineno, f"count must be a positive integer, got {parts[3]!r}")
            start = anon_counter.get((src, dst), 0)
            anon_counter[(src, dst)] = start + k
            for i in range(start + 1, start + k + 1):
                edges.append((f"{src}__{dst}__{i}", src, dst))
        else:
            raise ParseError(lineno, f"unknown directive {directive!r}")
    return build_graph(vertices, edges)


def serialize_graph(g: Graph) -> str:
    """Canonical GTF: vertices then edges, in graph order, one per line.
    parse_gtf(serialize_graph(g)) == g."""
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {e.id} {e.src} {e.dst}" for e in g.edges]
    return "\n".join(lines) + "\n" if lines else ""
