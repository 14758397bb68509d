"""Named graphs and the operators used to assemble the counterexample G*.

Every constructor is deterministic: repeated calls give identical edge
lists and identical label tables.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .multigraph import (
    EdgeOutOfRange,
    GraphError,
    MultiGraph,
    VertexOutOfRange,
    bridges,
    build,
    connected_components,
    edge_induced_subgraph,
    find_perfect_matching,
    is_k_regular,
)

__all__ = [
    "NAMES",
    "NamedGraph",
    "UnknownName",
    "DegreeTooHigh",
    "DegreeMismatch",
    "LabelNotPendant",
    "named",
    "petersen",
    "subdivide",
    "expand_to_triangle",
    "attach_pendant_copy",
    "build_g_star",
    "g_star_edge_partition",
    "two_circuit_edges",
]

NAMES = ("P", "S4", "S10", "S12", "GSTAR", "P_MINUS_V", "K4", "K33", "PRISM")


class UnknownName(KeyError):
    pass


class DegreeTooHigh(GraphError):
    pass


class DegreeMismatch(GraphError):
    pass


class LabelNotPendant(GraphError):
    pass


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: MultiGraph
    labels: dict[str, int] = field(default_factory=dict, compare=False)

    def __getitem__(self, label: str) -> int:
        return self.labels[label]

    def edge(self, a: str, b: str, nth: int = 0) -> int:
        """Id of the ``nth`` edge joining labelled vertices ``a`` and ``b``."""
        va, vb = self.labels[a], self.labels[b]
        hits = [e for e in self.graph.incidence[va] if self.graph.other_end(e, va) == vb]
        return hits[nth]


def petersen() -> MultiGraph:
    # outer 5-cycle 0..4, spokes i -> i+5, inner pentagram on 5..9
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build(10, outer + spokes + inner)


def _petersen() -> NamedGraph:
    return NamedGraph("P", petersen(), {str(i): i for i in range(10)})


def _s4() -> NamedGraph:
    g = build(4, [(0, 1), (0, 1), (0, 2), (1, 2), (2, 3)])
    return NamedGraph("S4", g, {"x": 0, "y": 1, "z": 2, "t": 3})


def _s10() -> NamedGraph:
    # w = 0, z_i = i, x_i = 2i + 2, y_i = 2i + 3
    pairs = [(0, i) for i in (1, 2, 3)]
    labels = {"w": 0}
    for i in (1, 2, 3):
        x, y = 2 * i + 2, 2 * i + 3
        labels.update({f"z{i}": i, f"x{i}": x, f"y{i}": y})
        pairs += [(i, x), (i, y), (x, y), (x, y)]
    return NamedGraph("S10", build(10, pairs), labels)


def _s12() -> NamedGraph:
    # w_i = i - 1, z_i = i + 2, x_i = 2i + 4, y_i = 2i + 5
    pairs = [(0, 1), (1, 2), (0, 2)]
    labels = {}
    for i in (1, 2, 3):
        w, z, x, y = i - 1, i + 2, 2 * i + 4, 2 * i + 5
        labels.update({f"w{i}": w, f"z{i}": z, f"x{i}": x, f"y{i}": y})
        pairs.append((w, z))
    for i in (1, 2, 3):
        z, x, y = i + 2, 2 * i + 4, 2 * i + 5
        pairs += [(z, x), (z, y), (x, y), (x, y)]
    return NamedGraph("S12", build(12, pairs), labels)


def _p_minus_v() -> NamedGraph:
    p = petersen()
    sub = edge_induced_subgraph(p, [e for e in range(p.m) if 0 not in p.edges[e]])
    return NamedGraph("P_MINUS_V", sub, {str(v): i for i, v in enumerate(sub.vertex_origin)})


def _k4() -> NamedGraph:
    return NamedGraph("K4", build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]), {})


def _k33() -> NamedGraph:
    return NamedGraph("K33", build(6, [(a, b) for a in (0, 1, 2) for b in (3, 4, 5)]), {})


def _prism() -> NamedGraph:
    pairs = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return NamedGraph("PRISM", build(6, pairs), {})


def subdivide(G: MultiGraph, e: int) -> MultiGraph:
    """Replace edge ``e`` = (a, b) by a path a - s - b through a new vertex s.

    Edge ``e`` keeps its id as (a, s); the new edge (s, b) gets id ``m``.
    """
    if not 0 <= e < G.m:
        raise EdgeOutOfRange(f"edge {e} not in [0, {G.m})")
    a, b = G.edges[e]
    s = G.n
    edges = list(G.edges)
    edges[e] = (a, s)
    edges.append((s, b))
    return build(G.n + 1, edges)


def expand_to_triangle(G: MultiGraph, v: int) -> MultiGraph:
    """Replace ``v`` by a triangle on ``v``, ``n`` and ``n + 1``.

    The former edges of ``v`` go, in incidence order, to ``v``, ``n`` and
    ``n + 1``; with degree 2 the vertex ``n + 1`` is left with degree 2.
    Triangle edges are appended as (v, n), (n, n + 1), (v, n + 1).
    """
    if not 0 <= v < G.n:
        raise VertexOutOfRange(f"vertex {v} not in [0, {G.n})")
    inc = G.incidence[v]
    if len(inc) > 3:
        raise DegreeTooHigh(f"vertex {v} has degree {len(inc)} > 3")
    tri = (v, G.n, G.n + 1)
    edges = list(G.edges)
    for slot, e in enumerate(inc):
        a, b = edges[e]
        edges[e] = (tri[slot], b) if a == v else (a, tri[slot])
    edges += [(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])]
    return build(G.n + 2, edges)


def _attach(G: MultiGraph, v: int, H: NamedGraph, t: str) -> tuple[MultiGraph, dict[int, int]]:
    if not 0 <= v < G.n:
        raise VertexOutOfRange(f"vertex {v} not in [0, {G.n})")
    if G.degree(v) != 2:
        raise DegreeMismatch(f"vertex {v} has degree {G.degree(v)}, expected 2")
    if t not in H.labels:
        raise LabelNotPendant(f"{H.name} has no label {t!r}")
    tv = H.labels[t]
    if H.graph.degree(tv) != 1:
        raise LabelNotPendant(f"{H.name}[{t}] has degree {H.graph.degree(tv)}, expected 1")
    vmap = {tv: v}
    nxt = G.n
    for x in range(H.graph.n):
        if x != tv:
            vmap[x] = nxt
            nxt += 1
    edges = list(G.edges) + [(vmap[a], vmap[b]) for a, b in H.graph.edges]
    return build(nxt, edges), vmap


def attach_pendant_copy(G: MultiGraph, v: int, H: NamedGraph, t: str) -> MultiGraph:
    """Glue a copy of ``H`` onto ``v`` by identifying its pendant vertex ``t`` with ``v``.

    The copy's other vertices get ids ``n, n+1, ...`` in their order in ``H``;
    its edges are appended in their order in ``H``.
    """
    return _attach(G, v, H, t)[0]


def build_g_star() -> NamedGraph:
    """Assemble G* from the Petersen graph, operating on vertex 0 (= u)."""
    g = petersen()
    u = 0
    at_u = list(g.incidence[u])
    subdiv = []
    for e in at_u:
        g = subdivide(g, e)
        subdiv.append(g.n - 1)
    # the subdivision vertex of the first edge at u becomes the triangle
    tri_src, s1, s2 = subdiv
    g = expand_to_triangle(g, tri_src)
    t1, t2, t3 = tri_src, g.n - 2, g.n - 1
    labels = {"u": u, "s1": s1, "s2": s2, "t1": t1, "t2": t2, "t3": t3}
    for i, v in enumerate((s1, s2, t3), start=1):
        g, vmap = _attach(g, v, _s4(), "t")
        s4 = _s4().labels
        labels.update({f"x{i}'": vmap[s4["x"]], f"y{i}'": vmap[s4["y"]], f"z{i}'": vmap[s4["z"]]})
    for i in range(1, 10):
        labels[str(i)] = i
    out = NamedGraph("GSTAR", g, labels)
    _check_g_star(out)
    return out


def _check_g_star(ng: NamedGraph):
    g = ng.graph
    assert (g.n, g.m) == (24, 36)
    assert is_k_regular(g, 3)
    assert len(connected_components(g)) == 1
    assert len(bridges(g)) == 3
    assert find_perfect_matching(g) is not None
    assert g.degree(ng["t3"]) == 3 and ng.edge("u", "t1") in g.incidence[ng["u"]]


def g_star_edge_partition(ng: NamedGraph | None = None) -> dict[str, frozenset[int]]:
    """Edge sets of G*: ``E1`` (the copy of P minus u), ``E2`` (the rest outside
    the S4 copies) and ``S4`` (edges of the three attached copies, bridges included)."""
    ng = ng or build_g_star()
    g = ng.graph
    s4_verts = {ng[f"{c}{i}'"] for c in "xyz" for i in (1, 2, 3)}
    petersen_rest = set(range(1, 10))
    e1, e2, s4 = set(), set(), set()
    for e, (a, b) in enumerate(g.edges):
        if a in s4_verts or b in s4_verts:
            s4.add(e)
        elif a in petersen_rest and b in petersen_rest:
            e1.add(e)
        else:
            e2.add(e)
    return {"E1": frozenset(e1), "E2": frozenset(e2), "S4": frozenset(s4)}


_BUILDERS = {
    "P": _petersen,
    "S4": _s4,
    "S10": _s10,
    "S12": _s12,
    "GSTAR": build_g_star,
    "P_MINUS_V": _p_minus_v,
    "K4": _k4,
    "K33": _k33,
    "PRISM": _prism,
}


def named(name: str) -> NamedGraph:
    """Catalog lookup; a leading ``@`` is accepted."""
    key = name[1:] if name.startswith("@") else name
    try:
        return _BUILDERS[key]()
    except KeyError:
        raise UnknownName(f"unknown catalog graph {name!r}; known: {', '.join(NAMES)}") from None


def two_circuit_edges(G: MultiGraph) -> frozenset[int]:
    """Edges having a parallel partner."""
    bundles: dict[tuple[int, int], list[int]] = {}
    for e, (a, b) in enumerate(G.edges):
        bundles.setdefault((min(a, b), max(a, b)), []).append(e)
    return frozenset(e for es in bundles.values() if len(es) > 1 for e in es)
