"""Shared fixtures, graph families and independent brute-force oracles.

The oracles here deliberately use different algorithms than the package
(boolean-closure reachability, edge-tuple cycle scans, forward-only
rational elimination) so agreement actually cross-checks something.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from leavitt_ibn import Graph, build_graph

RANDOM_GRAPH_SEED = 0x1BA5E5
RANDOM_MATRIX_SEED = 0x5E1ECF


# ── named fixture graphs ─────────────────────────────────────────────


def ex26() -> Graph:
    # three vertices: double loop at v1, chain v1 -> v2 -> v3, loop at v2
    return build_graph(
        ["v1", "v2", "v3"],
        [
            ("l1", "v1", "v1"),
            ("l2", "v1", "v1"),
            ("e", "v1", "v2"),
            ("f", "v2", "v2"),
            ("g", "v2", "v3"),
        ],
    )


def e29() -> Graph:
    # a source feeding the double-loop vertex, then a chain to a sink
    return build_graph(
        ["v0", "v1", "v2", "v3"],
        [
            ("a", "v0", "v1"),
            ("l1", "v1", "v1"),
            ("l2", "v1", "v1"),
            ("b", "v1", "v2"),
            ("c", "v2", "v3"),
        ],
    )


def f29() -> Graph:
    # e29 with the source eliminated; same edge ids so equality holds
    return build_graph(
        ["v1", "v2", "v3"],
        [
            ("l1", "v1", "v1"),
            ("l2", "v1", "v1"),
            ("b", "v1", "v2"),
            ("c", "v2", "v3"),
        ],
    )


def triv() -> Graph:
    return build_graph(["v"], [])


def rose(n: int) -> Graph:
    return build_graph(["v"], [(f"l{i}", "v", "v") for i in range(1, n + 1)])


def a_path(n: int) -> Graph:
    """Line graph v1 -> v2 -> ... -> vn."""
    vs = [f"v{i}" for i in range(1, n + 1)]
    es = [(f"e{i}", f"v{i}", f"v{i + 1}") for i in range(1, n)]
    return build_graph(vs, es)


def ex33() -> Graph:
    # loop with one exit into a sink
    return build_graph(["v0", "v"], [("e0", "v0", "v0"), ("e", "v0", "v")])


def ex36() -> Graph:
    # ex33 plus an in-tree: v2 -> v1 -> v0 <- loop, v3 -> v1
    return build_graph(
        ["v0", "v", "v1", "v2", "v3"],
        [
            ("e0", "v0", "v0"),
            ("e", "v0", "v"),
            ("e1", "v1", "v0"),
            ("e2", "v2", "v1"),
            ("e3", "v3", "v1"),
        ],
    )


# ── graph families ───────────────────────────────────────────────────


def all_graphs(max_vertices: int = 3, max_parallel: int = 2):
    """Every graph with 1..max_vertices vertices and 0..max_parallel edges
    per ordered vertex pair, enumerated deterministically."""
    for h in range(1, max_vertices + 1):
        vs = [f"v{i}" for i in range(1, h + 1)]
        pairs = [(a, b) for a in vs for b in vs]
        for counts in itertools.product(range(max_parallel + 1), repeat=len(pairs)):
            edges = []
            for (a, b), k in zip(pairs, counts):
                edges.extend((f"{a}__{b}__{i}", a, b) for i in range(1, k + 1))
            yield build_graph(vs, edges)


def random_graph(rng: random.Random, max_vertices: int = 6, max_edges: int = 12) -> Graph:
    h = rng.randint(1, max_vertices)
    vs = [f"v{i}" for i in range(1, h + 1)]
    m = rng.randint(0, max_edges)
    edges = [
        (f"e{i}", rng.choice(vs), rng.choice(vs)) for i in range(1, m + 1)
    ]
    return build_graph(vs, edges)


def random_graphs(count: int, seed: int = RANDOM_GRAPH_SEED, **kw):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_graph(rng, **kw)


def random_int_matrix(rng: random.Random, max_dim: int = 8, lo: int = -5, hi: int = 5):
    rows = rng.randint(1, max_dim)
    cols = rng.randint(1, max_dim)
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def valid_hereditary_sets(g: Graph):
    """Nonempty hereditary subsets H whose complement is acyclic and all of
    whose outside vertices reach H; exactly the sets the collapse move is
    meant for.  Brute subset enumeration, so keep graphs small."""
    reach = brute_reachability(g)
    cycles = brute_cycles(g)
    edge_src = {e.id: e.src for e in g.edges}
    vs = g.vertices
    for mask in range(1, 1 << len(vs)):
        h = frozenset(v for i, v in enumerate(vs) if mask >> i & 1)
        if any(e.dst not in h for e in g.edges if e.src in h):
            continue
        if any(all(edge_src[eid] not in h for eid in cyc) for cyc in cycles):
            continue
        if any(
            all(not reach[(u, w)] for w in h) for u in vs if u not in h
        ):
            continue
        yield h


# ── independent oracles ──────────────────────────────────────────────


def brute_reachability(g: Graph) -> dict[tuple[str, str], bool]:
    """Reflexive-transitive closure by saturation over a boolean matrix."""
    vs = g.vertices
    idx = {v: i for i, v in enumerate(vs)}
    n = len(vs)
    reach = [[i == j for j in range(n)] for i in range(n)]
    for e in g.edges:
        reach[idx[e.src]][idx[e.dst]] = True
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for k in range(n):
                if reach[i][k]:
                    row_i, row_k = reach[i], reach[k]
                    for j in range(n):
                        if row_k[j] and not row_i[j]:
                            row_i[j] = True
                            changed = True
    return {(v, w): reach[idx[v]][idx[w]] for v in vs for w in vs}


def brute_cycles(g: Graph) -> set[tuple[str, ...]]:
    """All closed non-revisiting edge sequences, found by scanning raw edge
    tuples and canonicalizing the rotation."""
    idx = g.index
    edges = list(g.edges)
    found: set[tuple[str, ...]] = set()
    for length in range(1, len(g.vertices) + 1):
        for combo in itertools.product(edges, repeat=length):
            if any(
                combo[i].dst != combo[(i + 1) % length].src for i in range(length)
            ):
                continue
            srcs = [e.src for e in combo]
            if len(set(srcs)) != length:
                continue
            k = min(range(length), key=lambda i: idx[srcs[i]])
            found.add(tuple(e.id for e in combo[k:] + combo[:k]))
    return found


def rational_elimination_rank(rows) -> int:
    """Forward-only Gaussian elimination over Fraction; independent of the
    package's fraction-free integer route."""
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        if r == len(a):
            break
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        lead = a[r]
        for i in range(r + 1, len(a)):
            if a[i][c]:
                factor = a[i][c] / lead[c]
                a[i] = [x - factor * y for x, y in zip(a[i], lead)]
        r += 1
    return r
