"""Graph moves that preserve or decide the IBN verdict.

Fresh names are deterministic functions of the operation and its inputs
(underscore schemes; vertex/edge tokens only allow letters, digits and
underscore).  A generated name colliding with an existing one raises
DuplicateVertex/DuplicateEdge rather than silently renaming.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import (
    BadCount,
    ComplementHasCycle,
    EmptyGraph,
    NotHereditary,
    UnknownEdge,
    UnknownVertex,
    WouldEmptyGraph,
    NotASource,
)
from .graph_core import (
    Graph,
    build_graph,
    canonical_order,
    get_edge,
    is_hereditary,
    regular_vertices,
)


def _check_count(n) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise BadCount(f"count must be a positive integer, got {n!r}")
    return n


def source_eliminate(g: Graph, v: str) -> Graph:
    """Delete a source vertex together with everything it emits."""
    if not g.has_vertex(v):
        raise UnknownVertex(v)
    if g.in_degree(v) > 0:
        raise NotASource(v)
    if len(g.vertices) == 1:
        raise WouldEmptyGraph(v)
    vertices = tuple(u for u in g.vertices if u != v)
    edges = tuple((e.id, e.src, e.dst) for e in g.edges if e.src != v)
    return build_graph(vertices, edges)


@dataclass(frozen=True)
class EliminationReport:
    result: Graph
    eliminated: tuple[str, ...]
    isolated_seen: bool
    # first isolated vertex observed and the stage (0 = input graph) where
    # it appeared; None when no intermediate graph had one
    first_isolated: Optional[tuple[str, int]]


def source_free_form(g: Graph) -> EliminationReport:
    """Eliminate sources until none remain, smallest canonical index first.
    A single leftover vertex is kept (never an empty graph).  By confluence
    the surviving vertex set does not depend on the elimination order."""
    if not g.vertices:
        raise EmptyGraph("source-free form needs at least one vertex")
    current = g
    eliminated: list[str] = []
    isolated_seen = False
    first_isolated: Optional[tuple[str, int]] = None
    stage = 0
    while True:
        if first_isolated is None:
            iso = next(
                (
                    v
                    for v in current.vertices
                    if current.in_degree(v) == 0 and current.out_degree(v) == 0
                ),
                None,
            )
            if iso is not None:
                isolated_seen = True
                first_isolated = (iso, stage)
        order, _ = canonical_order(current)
        pick = next((v for v in order if current.in_degree(v) == 0), None)
        if pick is None or len(current.vertices) == 1:
            break
        current = source_eliminate(current, pick)
        eliminated.append(pick)
        stage += 1
    return EliminationReport(current, tuple(eliminated), isolated_seen, first_isolated)


def cohn_cover(g: Graph) -> Graph:
    """Add a sink copy v__prime of every regular vertex v and duplicate
    every edge with regular range toward the copy.  The resulting algebra
    always has IBN, which makes this a stock rank-gap fixture."""
    regular = set(regular_vertices(g))
    vertices = list(g.vertices)
    vertices += [f"{v}__prime" for v in g.vertices if v in regular]
    edges = [(e.id, e.src, e.dst) for e in g.edges]
    edges += [
        (f"{e.id}__prime", e.src, f"{e.dst}__prime")
        for e in g.edges
        if e.dst in regular
    ]
    return build_graph(vertices, edges)


def attach_head(g: Graph, v0: str, n: int) -> Graph:
    """Attach the chain v0__hn -> ... -> v0__h1 -> v0 (n fresh vertices)."""
    if not g.has_vertex(v0):
        raise UnknownVertex(v0)
    n = _check_count(n)
    names = [f"{v0}__h{i}" for i in range(1, n + 1)]
    edges = [(e.id, e.src, e.dst) for e in g.edges]
    for i in range(1, n + 1):
        dst = v0 if i == 1 else names[i - 2]
        edges.append((f"{v0}__he{i}", names[i - 1], dst))
    return build_graph(tuple(g.vertices) + tuple(names), edges)


def attach_star(g: Graph, v0: str, n: int) -> Graph:
    """Attach n fresh sources, each with a single edge into v0."""
    if not g.has_vertex(v0):
        raise UnknownVertex(v0)
    n = _check_count(n)
    names = [f"{v0}__s{i}" for i in range(1, n + 1)]
    edges = [(e.id, e.src, e.dst) for e in g.edges]
    edges += [(f"{v0}__se{i}", names[i - 1], v0) for i in range(1, n + 1)]
    return build_graph(tuple(g.vertices) + tuple(names), edges)


def subdivide_edge(g: Graph, e0_id: str, n: int) -> Graph:
    """Replace edge e0 by a path through n fresh vertices:
    s(e0) -> e0__vn -> ... -> e0__v1 -> r(e0)."""
    e0 = get_edge(g, e0_id)
    if e0 is None:
        raise UnknownEdge(e0_id)
    n = _check_count(n)
    names = [f"{e0_id}__v{i}" for i in range(1, n + 1)]
    edges = [(e.id, e.src, e.dst) for e in g.edges if e.id != e0_id]
    edges.append((f"{e0_id}__e1", names[0], e0.dst))
    for i in range(2, n + 1):
        edges.append((f"{e0_id}__e{i}", names[i - 1], names[i - 2]))
    edges.append((f"{e0_id}__e{n + 1}", e0.src, names[n - 1]))
    return build_graph(tuple(g.vertices) + tuple(names), edges)


def _crossing_paths(g: Graph, hset: set[str]) -> list[tuple[str, ...]]:
    """All edge paths that stay outside hset until a final crossing edge.
    Requires the outside part (edges with range outside hset) acyclic, so
    the list is finite."""
    comp_in: dict[str, list] = {v: [] for v in g.vertices if v not in hset}
    for e in g.edges:
        if e.dst not in hset:
            comp_in[e.dst].append(e)

    # cycle check on the complement by depth-first coloring
    color: dict[str, int] = {}

    def visit(u: str):
        color[u] = 1
        for e in comp_in[u]:
            w = e.src
            c = color.get(w, 0)
            if c == 1:
                raise ComplementHasCycle(
                    f"complement of the hereditary set contains a cycle through {w}"
                )
            if c == 0:
                visit(w)
        color[u] = 2

    for u in comp_in:
        if color.get(u, 0) == 0:
            visit(u)

    prefix_cache: dict[str, list[tuple[str, ...]]] = {}

    def prefixes(u: str) -> list[tuple[str, ...]]:
        # complement paths ending at u, shortest first, in edge order
        got = prefix_cache.get(u)
        if got is None:
            got = [()]
            for e in comp_in[u]:
                got.extend(p + (e.id,) for p in prefixes(e.src))
            prefix_cache[u] = got
        return got

    paths: list[tuple[str, ...]] = []
    for e in g.edges:
        if e.src not in hset and e.dst in hset:
            paths.extend(p + (e.id,) for p in prefixes(e.src))
    return paths


def hereditary_collapse(g: Graph, vertex_set: Iterable[str]) -> Graph:
    """Restrict to a hereditary set H and replace every path arriving from
    outside by one fresh source with a single edge into the path's range.
    The fresh source is named by the path's edge ids joined with '_'."""
    hset = set(vertex_set)
    if not hset:
        raise WouldEmptyGraph("hereditary set must be nonempty")
    for v in hset:
        if not g.has_vertex(v):
            raise UnknownVertex(v)
    if not is_hereditary(g, hset):
        raise NotHereditary(f"set {sorted(hset)} is not closed under ranges")
    paths = _crossing_paths(g, hset)

    by_id = {e.id: e for e in g.edges}
    vertices = [v for v in g.vertices if v in hset]
    edges = [(e.id, e.src, e.dst) for e in g.edges if e.src in hset]
    for path in paths:
        name = "_".join(path)
        vertices.append(name)
        edges.append((f"{name}__in", name, by_id[path[-1]].dst))
    return build_graph(vertices, edges)


def source_free_equivalent(g: Graph) -> Optional[Graph]:
    """Source-free graph with the same IBN verdict, or None when an
    isolated vertex shows up during source elimination (in that case the
    verdict is already known: the algebra has IBN).

    Composite move: collapse onto the source-free form's vertex set, read
    each bundle of fresh sources into a common target as a star, trade the
    star for a head, and absorb the head by subdividing one in-edge of the
    target (smallest edge index; one exists because the base is
    source-free)."""
    report = source_free_form(g)
    if report.isolated_seen:
        return None
    if not report.eliminated:
        return g
    base = report.result
    hset = set(base.vertices)
    collapsed = hereditary_collapse(g, base.vertices)
    bundle: dict[str, int] = {}
    for e in collapsed.edges:
        if e.src not in hset:
            bundle[e.dst] = bundle.get(e.dst, 0) + 1
    current = base
    order, _ = canonical_order(base)
    for v0 in order:
        k = bundle.get(v0, 0)
        if not k:
            continue
        in_edges = base.in_edges(v0)
        assert in_edges  # base is source-free
        current = subdivide_edge(current, in_edges[0].id, k)
    return current
