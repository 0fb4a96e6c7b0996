"""Adjacency, isolated vertices, distances and diameter of the subgroup-prime-count graph.

Two distinct elements are adjacent when the order of the subgroup they
generate has at least k distinct prime divisors (default k = 3). Conjugation
by any group element is a graph automorphism, which licenses computing
adjacency rows and eccentricities at conjugacy-class representatives only.
"""

import multiprocessing
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .groups import two_generated_order
from .primes import prime_factors

DEFAULT_K = 3


class IsolatedVertexError(ValueError):
    """BFS or distance queried from an isolated vertex."""


def adjacent(table, i, j, k=DEFAULT_K):
    """Whether elements i and j generate a subgroup with >= k distinct prime divisors."""
    hit, _ = _adjacent_counted(table, i, j, k)
    return hit


def _adjacent_counted(table, i, j, k):
    """Adjacency test; second component counts stabilizer-chain constructions.

    Cheap sound prefilters run first: the orders of x, y and x*y all divide
    |<x, y>|, so their combined prime support certifies adjacency without a
    chain. Only pairs surviving the prefilters build a chain.
    """
    if i == j:
        return False, 0
    support = table.primes_of[i] | table.primes_of[j]
    if len(support) >= k:
        return True, 0
    x = table.elements[i]
    y = table.elements[j]
    if len(support | prime_factors((x * y).order())) >= k:
        return True, 0
    return len(prime_factors(two_generated_order(x, y))) >= k, 1


@dataclass
class NonFGraph:
    """Dense symmetric adjacency over all element indices, plus the induced
    graph on the non-isolated vertices."""

    table: object
    k: int
    adjacency: np.ndarray  # (n, n) bool, symmetric, empty diagonal
    isolated: np.ndarray   # (n,) bool
    vertices: np.ndarray   # sorted indices of non-isolated elements
    chain_builds: int = 0

    @property
    def n(self):
        return self.adjacency.shape[0]

    def isolated_vertices(self):
        """Element indices whose adjacency row is all-zero."""
        return set(int(i) for i in np.flatnonzero(self.isolated))


@dataclass
class DistanceReport:
    source: int
    distances: dict           # vertex -> hop count; unreachable vertices omitted
    eccentricity: int
    reaches_all: bool


@dataclass
class DiameterResult:
    status: str               # "empty" | "disconnected" | "connected"
    value: Optional[int] = None
    witness: Optional[Tuple[int, int]] = None


# module-level state for fork-based row workers
_ROW_STATE = {}


def _row_init(table, k):
    _ROW_STATE["table"] = table
    _ROW_STATE["k"] = k


def _row_worker(rep):
    table = _ROW_STATE["table"]
    k = _ROW_STATE["k"]
    n = len(table.elements)
    row = np.zeros(n, dtype=bool)
    builds = 0
    for j in range(n):
        hit, b = _adjacent_counted(table, rep, j, k)
        row[j] = hit
        builds += b
    return rep, np.packbits(row), builds


def build_graph(table, k=DEFAULT_K, mode="symmetry_reduced", jobs=1):
    """Construct the full adjacency bit-matrix and the isolated-vertex mask.

    mode "naive" tests every unordered pair directly; "symmetry_reduced"
    computes one adjacency row per conjugacy class and transports it along
    the conjugation orbit. Both produce identical matrices.
    """
    if mode not in ("naive", "symmetry_reduced"):
        raise ValueError(f"unknown mode {mode!r}")
    n = len(table.elements)
    adjacency = np.zeros((n, n), dtype=bool)
    builds = 0
    if len(prime_factors(n)) >= k:  # otherwise no subgroup can reach k primes
        if mode == "naive":
            for i in range(n):
                for j in range(i + 1, n):
                    hit, b = _adjacent_counted(table, i, j, k)
                    builds += b
                    if hit:
                        adjacency[i, j] = True
                        adjacency[j, i] = True
        else:
            builds = _build_reduced(table, k, adjacency, jobs)
    isolated = ~adjacency.any(axis=1)
    vertices = np.flatnonzero(~isolated)
    return NonFGraph(table=table, k=k, adjacency=adjacency,
                     isolated=isolated, vertices=vertices, chain_builds=builds)


def _build_reduced(table, k, adjacency, jobs):
    n = len(table.elements)
    reps = table.class_reps
    builds = 0
    if jobs > 1:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(jobs, initializer=_row_init, initargs=(table, k)) as pool:
            for rep, packed, b in pool.imap_unordered(_row_worker, reps, chunksize=1):
                adjacency[rep] = np.unpackbits(packed, count=n).astype(bool)
                builds += b
    else:
        for rep in reps:
            for j in range(n):
                hit, b = _adjacent_counted(table, rep, j, k)
                builds += b
                adjacency[rep, j] = hit
    # transport each representative row along its conjugation orbit: the row
    # of x^g at position j^g equals the row of x at position j
    gen_maps = [
        np.fromiter(
            (table.index_of[p.conjugate(g)] for p in table.elements), dtype=np.intp, count=n
        )
        for g in table.generators
    ]
    done = np.zeros(n, dtype=bool)
    for rep in reps:
        done[rep] = True
        stack = [rep]
        while stack:
            x = stack.pop()
            for pi in gen_maps:
                y = int(pi[x])
                if not done[y]:
                    adjacency[y, pi] = adjacency[x]
                    done[y] = True
                    stack.append(y)
    return builds


def _bfs_levels(graph, source):
    """Distance array over all element indices; -1 marks unreachable."""
    n = graph.n
    dist = np.full(n, -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.zeros(n, dtype=bool)
    frontier[source] = True
    visited = frontier.copy()
    d = 0
    while frontier.any():
        d += 1
        nxt = graph.adjacency[frontier].any(axis=0) & ~visited
        dist[nxt] = d
        visited |= nxt
        frontier = nxt
    return dist


def bfs(graph, source):
    """Breadth-first distances within the induced graph on non-isolated vertices."""
    if graph.isolated[source]:
        raise IsolatedVertexError(f"vertex {source} is isolated")
    dist = _bfs_levels(graph, source)
    reached = dist >= 0
    distances = {int(v): int(dist[v]) for v in graph.vertices if reached[v]}
    return DistanceReport(
        source=source,
        distances=distances,
        eccentricity=int(dist.max()),
        reaches_all=bool(reached[graph.vertices].all()),
    )


def distance(graph, i, j):
    """Hop count between two non-isolated vertices; None when unreachable."""
    for v in (i, j):
        if graph.isolated[v]:
            raise IsolatedVertexError(f"vertex {v} is isolated")
    d = _bfs_levels(graph, i)[j]
    return None if d < 0 else int(d)


def diameter(graph, per_vertex=False):
    """Diameter of the induced graph on non-isolated vertices.

    Eccentricity is constant on conjugacy classes, so only class
    representatives are scanned unless per_vertex is set (kept as the
    correctness escape hatch for the equivalence tests).
    """
    if len(graph.vertices) == 0:
        return DiameterResult(status="empty")
    if per_vertex:
        sources = [int(v) for v in graph.vertices]
    else:
        sources = [r for r in graph.table.class_reps if not graph.isolated[r]]
    best = 0
    for s in sources:
        dist = _bfs_levels(graph, s)
        unreached = graph.vertices[dist[graph.vertices] < 0]
        if unreached.size:
            return DiameterResult(status="disconnected", witness=(s, int(unreached[0])))
        best = max(best, int(dist[graph.vertices].max()))
    return DiameterResult(status="connected", value=best)


def eccentricities(graph, sources):
    """Eccentricity (and reachability) per source; helper for the test oracles."""
    out = {}
    for s in sources:
        rep = bfs(graph, int(s))
        out[int(s)] = (rep.eccentricity, rep.reaches_all)
    return out


def neighbor_order_profile(graph, v):
    """Multiset of element orders over the neighbors of v."""
    return Counter(int(graph.table.order_of[u]) for u in np.flatnonzero(graph.adjacency[v]))
