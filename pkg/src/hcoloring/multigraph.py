"""Loop-free multigraphs and the structural quantities used on them.

Vertices and edges are dense integer ids.  Parallel edges are distinct
edges with distinct ids; loops are rejected.  Graphs are immutable once
built, so every function here is pure.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "GraphError",
    "LoopRejected",
    "VertexOutOfRange",
    "EdgeOutOfRange",
    "EmptyGraph",
    "ResourceLimit",
    "MultiGraph",
    "build",
    "star",
    "edge_induced_subgraph",
    "without_edges",
    "connected_components",
    "bridges",
    "is_k_regular",
    "iter_circuits",
    "circuit_lengths",
    "edge_coloring",
    "chromatic_index",
    "find_perfect_matching",
    "is_matching",
]

DEFAULT_CIRCUIT_CAP = 10**6


class GraphError(ValueError):
    pass


class LoopRejected(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class EdgeOutOfRange(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class ResourceLimit(RuntimeError):
    """A configured enumeration cap was exceeded."""


@dataclass(frozen=True)
class MultiGraph:
    """Immutable multigraph with ``n`` vertices and an ordered edge list.

    ``edges[e]`` is the endpoint pair of edge ``e``.  ``vertex_origin`` and
    ``edge_origin`` are set on subgraphs and map local ids back to the
    parent graph; they take no part in equality.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    vertex_origin: tuple[int, ...] | None = field(default=None, compare=False, repr=False)
    edge_origin: tuple[int, ...] | None = field(default=None, compare=False, repr=False)
    incidence: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e, (a, b) in enumerate(self.edges):
            inc[a].append(e)
            inc[b].append(e)
        object.__setattr__(self, "incidence", tuple(tuple(x) for x in inc))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def degrees(self) -> list[int]:
        return [len(x) for x in self.incidence]

    def max_degree(self) -> int:
        return max((len(x) for x in self.incidence), default=0)

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def adjacent_edges(self, e: int) -> set[int]:
        """Edges sharing at least one endpoint with ``e`` (parallel partners included)."""
        a, b = self.edges[e]
        out = set(self.incidence[a]) | set(self.incidence[b])
        out.discard(e)
        return out

    def has_parallel_edges(self) -> bool:
        seen = set()
        for a, b in self.edges:
            key = (min(a, b), max(a, b))
            if key in seen:
                return True
            seen.add(key)
        return False

    def __repr__(self):
        return f"MultiGraph(n={self.n}, m={self.m})"


def build(n: int, pairs: Iterable[Sequence[int]]) -> MultiGraph:
    """Build a multigraph on ``n`` vertices; edge ids follow input order."""
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    edges = []
    for i, (a, b) in enumerate(pairs):
        a, b = int(a), int(b)
        if not (0 <= a < n and 0 <= b < n):
            raise VertexOutOfRange(f"edge {i} = ({a}, {b}) has an endpoint outside [0, {n})")
        if a == b:
            raise LoopRejected(f"edge {i} is a loop at vertex {a}")
        edges.append((a, b))
    return MultiGraph(n, tuple(edges))


def _check_vertex(G: MultiGraph, v: int):
    if not 0 <= v < G.n:
        raise VertexOutOfRange(f"vertex {v} not in [0, {G.n})")


def _check_edges(G: MultiGraph, edge_ids: Iterable[int]) -> list[int]:
    out = sorted(set(edge_ids))
    for e in out:
        if not 0 <= e < G.m:
            raise EdgeOutOfRange(f"edge {e} not in [0, {G.m})")
    return out


def star(G: MultiGraph, v: int) -> frozenset[int]:
    """The set of edges incident with ``v``."""
    _check_vertex(G, v)
    return frozenset(G.incidence[v])


def edge_induced_subgraph(G: MultiGraph, edge_ids: Iterable[int]) -> MultiGraph:
    """Subgraph formed by ``edge_ids`` and exactly the vertices they touch.

    Local vertex ids follow parent id order, local edge ids follow parent
    edge id order.  The origin tables on the result map back to ``G``.
    """
    es = _check_edges(G, edge_ids)
    verts = sorted({v for e in es for v in G.edges[e]})
    local = {v: i for i, v in enumerate(verts)}
    pairs = tuple((local[G.edges[e][0]], local[G.edges[e][1]]) for e in es)
    return MultiGraph(len(verts), pairs, vertex_origin=tuple(verts), edge_origin=tuple(es))


def without_edges(G: MultiGraph, edge_ids: Iterable[int]) -> MultiGraph:
    """Spanning subgraph of ``G`` with ``edge_ids`` deleted (vertices kept)."""
    drop = set(_check_edges(G, edge_ids))
    keep = [e for e in range(G.m) if e not in drop]
    return MultiGraph(
        G.n,
        tuple(G.edges[e] for e in keep),
        vertex_origin=tuple(range(G.n)),
        edge_origin=tuple(keep),
    )


def connected_components(G: MultiGraph) -> list[list[int]]:
    """Vertex partition into components, each sorted, ordered by least vertex."""
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for e in G.incidence[v]:
                w = G.other_end(e, v)
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def bridges(G: MultiGraph) -> frozenset[int]:
    """Bridges via iterative DFS low-links.

    The tree edge is skipped by id rather than by endpoint, so a parallel
    partner counts as a back edge and parallel edges are never bridges.
    """
    disc = [-1] * G.n
    low = [0] * G.n
    out = set()
    t = 0
    for root in range(G.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        # frames: (vertex, edge used to enter, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, via, i = stack[-1]
            inc = G.incidence[v]
            if i < len(inc):
                stack[-1] = (v, via, i + 1)
                e = inc[i]
                if e == via:
                    continue
                w = G.other_end(e, v)
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, e, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        out.add(via)
    return frozenset(out)


def is_k_regular(G: MultiGraph, k: int) -> bool:
    return all(len(x) == k for x in G.incidence)


def iter_circuits(G: MultiGraph, cap: int = DEFAULT_CIRCUIT_CAP) -> Iterator[tuple[int, ...]]:
    """Yield every circuit of ``G`` once, as a sorted tuple of edge ids.

    Each pair of parallel edges is a 2-circuit.  Longer circuits are found
    on the underlying simple graph by DFS from their least vertex, with the
    second vertex smaller than the last to fix a direction; each vertex
    cycle is then expanded over all choices of parallel edges.
    Raises ``ResourceLimit`` once more than ``cap`` circuits are produced.
    """
    bundles: dict[tuple[int, int], list[int]] = {}
    for e, (a, b) in enumerate(G.edges):
        bundles.setdefault((min(a, b), max(a, b)), []).append(e)
    nbrs: list[list[int]] = [[] for _ in range(G.n)]
    for a, b in bundles:
        nbrs[a].append(b)
        nbrs[b].append(a)
    for x in nbrs:
        x.sort()

    count = 0

    def emit(c):
        nonlocal count
        count += 1
        if count > cap:
            raise ResourceLimit(f"more than {cap} circuits")
        return c

    for es in bundles.values():
        for i in range(len(es)):
            for j in range(i + 1, len(es)):
                yield emit((es[i], es[j]))

    def expand(cycle):
        choices = [bundles[(min(a, b), max(a, b))] for a, b in zip(cycle, cycle[1:] + cycle[:1])]
        out = [()]
        for ch in choices:
            out = [p + (e,) for p in out for e in ch]
        return [tuple(sorted(p)) for p in out]

    for s in range(G.n):
        path = [s]
        on_path = {s}
        iters = [iter(nbrs[s])]
        while iters:
            w = next(iters[-1], None)
            if w is None:
                iters.pop()
                on_path.discard(path.pop())
                continue
            if w == s and len(path) >= 3 and path[1] < path[-1]:
                for c in expand(path):
                    yield emit(c)
                continue
            if w <= s or w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            iters.append(iter(nbrs[w]))


def circuit_lengths(G: MultiGraph, cap: int = DEFAULT_CIRCUIT_CAP) -> set[int]:
    return {len(c) for c in iter_circuits(G, cap)}


def _edge_order(G: MultiGraph) -> list[int]:
    # greedy: next edge is the one adjacent to most already-ordered edges
    order: list[int] = []
    placed = [False] * G.m
    weight = [0] * G.m
    adj = [G.adjacent_edges(e) for e in range(G.m)]
    for _ in range(G.m):
        best = max(
            (e for e in range(G.m) if not placed[e]),
            key=lambda e: (weight[e], len(adj[e]), -e),
        )
        placed[best] = True
        order.append(best)
        for f in adj[best]:
            weight[f] += 1
    return order


def edge_coloring(G: MultiGraph, k: int) -> list[int] | None:
    """A proper edge coloring with colors ``0..k-1``, or None if none exists.

    Exact backtracking; the first edge is fixed to color 0 and every later
    edge may open at most one new color.
    """
    if G.m == 0:
        return []
    if k < G.max_degree():
        return None
    order = _edge_order(G)
    adj = [sorted(G.adjacent_edges(e)) for e in range(G.m)]
    color = [-1] * G.m

    def rec(i, used):
        if i == len(order):
            return True
        e = order[i]
        busy = {color[f] for f in adj[e]}
        for c in range(min(k, used + 1)):
            if c in busy:
                continue
            color[e] = c
            if rec(i + 1, max(used, c + 1)):
                return True
        color[e] = -1
        return False

    return list(color) if rec(0, 0) else None


def chromatic_index(G: MultiGraph) -> int:
    if G.m == 0:
        raise EmptyGraph("chromatic index of an edgeless graph is undefined here")
    k = G.max_degree()
    while edge_coloring(G, k) is None:
        k += 1
    return k


def is_matching(G: MultiGraph, edge_ids: Iterable[int]) -> bool:
    seen = set()
    for e in edge_ids:
        for v in G.edges[e]:
            if v in seen:
                return False
            seen.add(v)
    return True


def find_perfect_matching(G: MultiGraph) -> frozenset[int] | None:
    """A perfect matching by branching on the least uncovered vertex, or None."""
    if G.n % 2:
        return None
    covered = [False] * G.n
    chosen: list[int] = []

    def rec(start):
        v = start
        while v < G.n and covered[v]:
            v += 1
        if v == G.n:
            return True
        covered[v] = True
        tried = set()
        for e in G.incidence[v]:
            w = G.other_end(e, v)
            if covered[w] or w in tried:
                continue
            tried.add(w)
            covered[w] = True
            chosen.append(e)
            if rec(v + 1):
                return True
            chosen.pop()
            covered[w] = False
        covered[v] = False
        return False

    if not rec(0):
        return None
    result = frozenset(chosen)
    assert len(result) * 2 == G.n and is_matching(G, result)
    return result
