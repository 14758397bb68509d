"""H-colorings: verification, exact search, lifting and composition.

An H-coloring of G maps E(G) to E(H) so that adjacent edges get distinct
images and every star of G lands exactly on some star of H.  Because a
star of G has ``deg(v)`` edges, the two conditions together say that the
restriction of the map to each star of G is a bijection onto a star of H.
The solver branches on these star bijections.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .multigraph import (
    MultiGraph,
    ResourceLimit as _CircuitLimit,
    bridges,
    chromatic_index,
    edge_induced_subgraph,
    is_k_regular,
    iter_circuits,
)

__all__ = [
    "ColoringError",
    "MappingNotTotal",
    "NotACertificate",
    "TargetMismatch",
    "NotCubic",
    "NotProper",
    "DegreeMismatch",
    "EdgeMapping",
    "VertexMapping",
    "VerifyReport",
    "SolveOptions",
    "SolveStats",
    "SolveOutcome",
    "PropertyReport",
    "COLORABLE",
    "NOT_COLORABLE",
    "RESOURCE_LIMIT",
    "verify",
    "induced_vertex_map",
    "solve",
    "search",
    "enumerate_colorings",
    "class1_lift",
    "compose",
    "identity",
    "check_observation1",
]

COLORABLE = "COLORABLE"
NOT_COLORABLE = "NOT_COLORABLE"
RESOURCE_LIMIT = "RESOURCE_LIMIT"


class ColoringError(ValueError):
    pass


class MappingNotTotal(ColoringError):
    pass


class NotACertificate(ColoringError):
    pass


class TargetMismatch(ColoringError):
    pass


class NotCubic(ColoringError):
    pass


class NotProper(ColoringError):
    pass


class DegreeMismatch(ColoringError):
    pass


@dataclass(frozen=True)
class EdgeMapping:
    """``image[e]`` is the edge of ``target`` that edge ``e`` of ``source`` maps to."""

    source: MultiGraph
    target: MultiGraph
    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if len(self.image) != self.source.m:
            raise MappingNotTotal(
                f"mapping has {len(self.image)} images for {self.source.m} edges"
            )
        for e, h in enumerate(self.image):
            if not 0 <= h < self.target.m:
                raise MappingNotTotal(f"edge {e} maps to {h}, not an edge of the target")

    def __getitem__(self, e: int) -> int:
        return self.image[e]

    def preimage(self, target_edges) -> frozenset[int]:
        hs = set(target_edges)
        return frozenset(e for e, h in enumerate(self.image) if h in hs)


@dataclass(frozen=True)
class VertexMapping:
    image: tuple[int, ...]
    ambiguous: tuple[int, ...] = ()

    def __getitem__(self, v: int) -> int:
        return self.image[v]


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    condition: str | None = None  # "proper" or "star"
    witness: tuple = ()
    message: str = ""

    def __bool__(self):
        return self.ok


def verify(G: MultiGraph, H: MultiGraph, f: EdgeMapping | Sequence[int]) -> VerifyReport:
    """Check both defining conditions directly, pair by pair and star by star.

    Deliberately independent of the solver: adjacency is tested on edge
    pairs and the star condition by scanning all vertices of H.
    """
    image = f.image if isinstance(f, EdgeMapping) else tuple(f)
    if len(image) != G.m:
        raise MappingNotTotal(f"mapping has {len(image)} images for {G.m} edges")
    for e, h in enumerate(image):
        if not 0 <= h < H.m:
            raise MappingNotTotal(f"edge {e} maps to {h}, not an edge of H")

    for e1 in range(G.m):
        ends1 = set(G.edges[e1])
        for e2 in range(e1 + 1, G.m):
            if ends1 & set(G.edges[e2]) and image[e1] == image[e2]:
                return VerifyReport(
                    False, "proper", (e1, e2),
                    f"adjacent edges {e1} and {e2} both map to {image[e1]}",
                )

    h_stars = [frozenset(H.incidence[u]) for u in range(H.n)]
    for v in range(G.n):
        img = frozenset(image[e] for e in G.incidence[v])
        if img not in h_stars:
            return VerifyReport(
                False, "star", (v,),
                f"image of the star of vertex {v} is {sorted(img)}, not a star of H",
            )
    return VerifyReport(True)


def _require_certificate(f: EdgeMapping):
    rep = verify(f.source, f.target, f)
    if not rep.ok:
        raise NotACertificate(rep.message)


def induced_vertex_map(G: MultiGraph, H: MultiGraph, f: EdgeMapping) -> VertexMapping:
    """For each vertex of G, the vertex of H whose star is the image of its star.

    Two vertices of H share a star only when their component is a bundle
    of parallel edges (or both are isolated).  Then the lowest id is used
    and the vertex of G is listed in ``ambiguous``.
    """
    rep = verify(G, H, f)
    if not rep.ok:
        raise NotACertificate(rep.message)
    owners: dict[frozenset[int], list[int]] = {}
    for u in range(H.n):
        owners.setdefault(frozenset(H.incidence[u]), []).append(u)
    out, amb = [], []
    for v in range(G.n):
        us = owners[frozenset(f.image[e] for e in G.incidence[v])]
        out.append(us[0])
        if len(us) > 1:
            amb.append(v)
    return VertexMapping(tuple(out), tuple(amb))


def identity(G: MultiGraph) -> EdgeMapping:
    return EdgeMapping(G, G, tuple(range(G.m)))


# --------------------------------------------------------------------------
# search


@dataclass(frozen=True)
class SolveOptions:
    node_limit: int | None = None
    time_limit: float | None = None
    order_heuristic: str = "most_constrained"  # or "bfs"
    collect_stats: bool = True
    use_bridge_rule: bool = True
    break_parallel_symmetry: bool = False

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if self.order_heuristic not in ("most_constrained", "bfs"):
            raise ValueError(f"unknown order heuristic {self.order_heuristic!r}")


@dataclass
class SolveStats:
    nodes: int = 0
    max_depth: int = 0
    wall_time: float = 0.0

    def as_dict(self) -> dict:
        return {"nodes": self.nodes, "max_depth": self.max_depth, "wall_time": self.wall_time}


@dataclass
class SolveOutcome:
    status: str
    certificate: EdgeMapping | None = None
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def colorable(self) -> bool:
        return self.status == COLORABLE


class _Stop(Exception):
    pass


class _Search:
    """Star-bijection CSP.

    Edge domains are bitmasks over E(H).  A vertex option is a pair
    (u, images) with ``images[j]`` the image of the j-th edge at v; an
    option is live while every image is still in its edge's domain.
    Propagation shrinks each edge domain to the images that some live
    option at *each* endpoint still allows, up to a fixpoint.
    """

    def __init__(self, G: MultiGraph, H: MultiGraph, opts: SolveOptions):
        self.G, self.H, self.opts = G, H, opts
        self.stats = SolveStats()
        self.deadline = None if opts.time_limit is None else time.perf_counter() + opts.time_limit

        by_star: dict[tuple[int, ...], int] = {}
        for u in range(H.n):
            by_star.setdefault(tuple(sorted(H.incidence[u])), u)
        by_degree: dict[int, list[tuple[int, tuple[int, ...]]]] = {}
        for st, u in sorted(by_star.items(), key=lambda kv: kv[1]):
            by_degree.setdefault(len(st), []).append((u, st))

        allowed = [(1 << H.m) - 1] * G.m
        if opts.use_bridge_rule:
            hb = 0
            for h in bridges(H):
                hb |= 1 << h
            for e in bridges(G):
                allowed[e] &= hb
        self.init_domains = allowed

        self.options: list[list[tuple[int, tuple[int, ...]]]] = []
        for v in range(G.n):
            opts_v = []
            for u, st in by_degree.get(G.degree(v), []):
                for perm in itertools.permutations(st):
                    opts_v.append((u, perm))
            self.options.append(opts_v)

        self.parallel_class = list(range(H.m))
        seen: dict[tuple[int, int], int] = {}
        for h, (a, b) in enumerate(H.edges):
            key = (min(a, b), max(a, b))
            self.parallel_class[h] = seen.setdefault(key, h)

        if opts.order_heuristic == "bfs":
            self.bfs_rank = self._bfs_order()

    def _bfs_order(self) -> list[int]:
        G = self.G
        rank = [0] * G.n
        seen = [False] * G.n
        k = 0
        for s in range(G.n):
            if seen[s]:
                continue
            seen[s] = True
            queue = [s]
            for v in queue:
                rank[v] = k
                k += 1
                for e in G.incidence[v]:
                    w = G.other_end(e, v)
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
        return rank

    def live(self, v: int, dom: list[int]):
        inc = self.G.incidence[v]
        return [
            o for o in self.options[v]
            if all(dom[e] >> h & 1 for e, h in zip(inc, o[1]))
        ]

    def propagate(self, dom: list[int], queue: list[int]) -> bool:
        G = self.G
        pending = set(queue)
        while queue:
            v = queue.pop()
            pending.discard(v)
            inc = G.incidence[v]
            live = self.live(v, dom)
            if not live:
                return False
            support = [0] * len(inc)
            for _, imgs in live:
                for j, h in enumerate(imgs):
                    support[j] |= 1 << h
            for j, e in enumerate(inc):
                nd = dom[e] & support[j]
                if nd != dom[e]:
                    if not nd:
                        return False
                    dom[e] = nd
                    w = G.other_end(e, v)
                    if w not in pending:
                        pending.add(w)
                        queue.append(w)
        return True

    def _tick(self, depth: int):
        st = self.stats
        st.nodes += 1
        if depth > st.max_depth:
            st.max_depth = depth
        if self.opts.node_limit is not None and st.nodes > self.opts.node_limit:
            raise _Stop
        if self.deadline is not None and time.perf_counter() > self.deadline:
            raise _Stop

    def _pick(self, dom: list[int], assigned: list[bool]):
        best = None
        for v in range(self.G.n):
            if assigned[v]:
                continue
            if self.opts.order_heuristic == "bfs":
                key = (self.bfs_rank[v],)
                if best is None or key < best[0]:
                    best = (key, v, None)
            else:
                live = self.live(v, dom)
                key = (len(live), v)
                if best is None or key < best[0]:
                    best = (key, v, live)
                    if not live:
                        break
        _, v, live = best
        return v, (live if live is not None else self.live(v, dom))

    def run(self) -> Iterator[tuple[int, ...]]:
        G = self.G
        dom = list(self.init_domains)
        if any(d == 0 for d in dom) and G.m:
            return
        if not self.propagate(dom, list(range(G.n))):
            return
        yield from self._rec(dom, [False] * G.n, 0)

    def _rec(self, dom, assigned, depth) -> Iterator[tuple[int, ...]]:
        self._tick(depth)
        if all(assigned):
            yield tuple((d & -d).bit_length() - 1 for d in dom)
            return
        v, live = self._pick(dom, assigned)
        if depth == 0 and self.opts.break_parallel_symmetry:
            seen, kept = set(), []
            for o in live:
                key = (o[0], tuple(self.parallel_class[h] for h in o[1]))
                if key not in seen:
                    seen.add(key)
                    kept.append(o)
            live = kept
        inc = self.G.incidence[v]
        assigned[v] = True
        for _, imgs in live:
            nd = list(dom)
            for e, h in zip(inc, imgs):
                nd[e] = 1 << h
            if self.propagate(nd, [v] + [self.G.other_end(e, v) for e in inc]):
                yield from self._rec(nd, assigned, depth + 1)
        assigned[v] = False


def search(
    G: MultiGraph, H: MultiGraph, opts: SolveOptions, limit: int
) -> tuple[list[EdgeMapping], bool, SolveStats]:
    """Run the search for up to ``limit`` colorings; also report whether it was exhaustive."""
    s = _Search(G, H, opts)
    t0 = time.perf_counter()
    found: list[EdgeMapping] = []
    exhausted = False
    try:
        for image in s.run():
            f = EdgeMapping(G, H, image)
            rep = verify(G, H, f)
            assert rep.ok, rep.message
            found.append(f)
            if len(found) >= limit:
                break
        else:
            exhausted = True
    except _Stop:
        pass
    s.stats.wall_time = time.perf_counter() - t0
    return found, exhausted, s.stats


def solve(G: MultiGraph, H: MultiGraph, opts: SolveOptions | None = None) -> SolveOutcome:
    """Decide whether H colors G.

    ``NOT_COLORABLE`` is returned only when the search space was exhausted;
    any limit hit gives ``RESOURCE_LIMIT``.
    """
    opts = opts or SolveOptions()
    found, exhausted, stats = search(G, H, opts, 1)
    if found:
        return SolveOutcome(COLORABLE, found[0], stats)
    return SolveOutcome(NOT_COLORABLE if exhausted else RESOURCE_LIMIT, None, stats)


def enumerate_colorings(
    G: MultiGraph, H: MultiGraph, opts: SolveOptions | None = None, limit: int = 1
) -> list[EdgeMapping]:
    """Up to ``limit`` distinct H-colorings of G."""
    if limit < 1:
        raise ValueError("limit must be at least 1")
    opts = opts or SolveOptions()
    if opts.break_parallel_symmetry:
        raise ValueError("enumeration would miss colorings under parallel-edge symmetry breaking")
    return search(G, H, opts, limit)[0]


# --------------------------------------------------------------------------
# constructions


def class1_lift(G: MultiGraph, coloring: Sequence[int], H: MultiGraph, u: int) -> EdgeMapping:
    """Send color class c of a 3-edge-coloring of cubic G to the c-th edge at ``u``."""
    if not is_k_regular(G, 3):
        raise NotCubic("G is not cubic")
    coloring = list(coloring)
    if len(coloring) != G.m or any(c not in (0, 1, 2) for c in coloring):
        raise NotProper("coloring must assign a color in {0, 1, 2} to every edge")
    for v in range(G.n):
        cs = [coloring[e] for e in G.incidence[v]]
        if len(set(cs)) != len(cs):
            raise NotProper(f"two edges at vertex {v} share a color")
    if H.degree(u) != 3:
        raise DegreeMismatch(f"vertex {u} of H has degree {H.degree(u)}, expected 3")
    st = H.incidence[u]
    f = EdgeMapping(G, H, tuple(st[c] for c in coloring))
    assert verify(G, H, f).ok
    return f


def compose(f1: EdgeMapping, f2: EdgeMapping) -> EdgeMapping:
    """The H2-coloring ``f2 . f1`` of G from f1: G -> H1 and f2: H1 -> H2."""
    if f1.target != f2.source:
        raise TargetMismatch("target of the first mapping is not the source of the second")
    _require_certificate(f1)
    _require_certificate(f2)
    f = EdgeMapping(f1.source, f2.target, tuple(f2.image[h] for h in f1.image))
    rep = verify(f.source, f.target, f)
    assert rep.ok, rep.message
    return f


# --------------------------------------------------------------------------
# structural property checks


@dataclass
class PropertyReport:
    regular: bool = True
    chromatic: bool = True
    bridge: bool = True
    regular_witnesses: list = field(default_factory=list)
    chromatic_witnesses: list = field(default_factory=list)
    bridge_witnesses: list = field(default_factory=list)
    subgraphs_checked: int = 0

    @property
    def passed(self) -> bool:
        return self.regular and self.chromatic and self.bridge


def _test_family(H: MultiGraph, circuit_cap: int):
    """(name, edge set, k or None) for the subgraphs of H that get checked."""
    fam = [(f"edge {h}", frozenset([h]), 1) for h in range(H.m)]
    try:
        circuits = list(iter_circuits(H, cap=circuit_cap))
    except _CircuitLimit:
        circuits = [c for c in iter_circuits(H) if len(c) == 2][:circuit_cap]
    fam += [(f"circuit {list(c)}", frozenset(c), 2) for c in circuits]
    fam += [(f"star {u}", frozenset(H.incidence[u]), None) for u in range(H.n) if H.incidence[u]]
    degs = set(H.degrees())
    if H.m and len(degs) == 1:
        fam.append(("H", frozenset(range(H.m)), degs.pop()))
    tc = two_circuit_union(H)
    if tc:
        fam.append(("all 2-circuit edges", tc, 2))
    return fam


def two_circuit_union(H: MultiGraph) -> frozenset[int]:
    """Union of all 2-circuits of H, or the empty set when that union is not 2-regular."""
    bundles: dict[tuple[int, int], list[int]] = {}
    for h, (a, b) in enumerate(H.edges):
        bundles.setdefault((min(a, b), max(a, b)), []).append(h)
    out = set()
    for hs in bundles.values():
        if len(hs) > 1:
            out.update(hs)
    sub = edge_induced_subgraph(H, out) if out else None
    if sub is None or not is_k_regular(sub, 2):
        return frozenset()
    return frozenset(out)


def check_observation1(
    G: MultiGraph, H: MultiGraph, f: EdgeMapping, circuit_cap: int = 2000
) -> PropertyReport:
    """Check the three structural consequences of an H-coloring.

    (i) the preimage of a k-regular subgraph of H induces a k-regular
    subgraph of G; (ii) that preimage needs no more colors than the
    subgraph itself; (iii) bridges go to bridges.  Subgraphs tested: every
    edge, every circuit (up to ``circuit_cap``), every star, the union of
    all 2-circuits when it is 2-regular, and H itself when regular.
    """
    rep0 = verify(G, H, f)
    if not rep0.ok:
        raise NotACertificate(rep0.message)
    rep = PropertyReport()
    for name, hs, k in _test_family(H, circuit_cap):
        rep.subgraphs_checked += 1
        pre = f.preimage(hs)
        sub_g = edge_induced_subgraph(G, pre)
        if k is not None and not is_k_regular(sub_g, k):
            rep.regular = False
            rep.regular_witnesses.append(name)
        if pre:
            if chromatic_index(sub_g) > chromatic_index(edge_induced_subgraph(H, hs)):
                rep.chromatic = False
                rep.chromatic_witnesses.append(name)
    hb = bridges(H)
    for e in sorted(bridges(G)):
        if f.image[e] not in hb:
            rep.bridge = False
            rep.bridge_witnesses.append(e)
    return rep
