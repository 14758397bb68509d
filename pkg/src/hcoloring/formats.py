"""graph6 / sparse6 codecs, a plain edge-list format, and certificate files.

graph6 and sparse6 follow the nauty format description byte for byte.
All text formats are line-oriented; lines starting with ``c `` are comments.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .catalog import UnknownName, named
from .hcolor import EdgeMapping, MappingNotTotal, NotACertificate, induced_vertex_map, verify
from .multigraph import GraphError, LoopRejected, MultiGraph, build

__all__ = [
    "MalformedEncoding",
    "UnknownGraphDesignator",
    "parse_graph6",
    "write_graph6",
    "parse_sparse6",
    "write_sparse6",
    "parse_edgelist",
    "write_edgelist",
    "parse_graph",
    "encode_graph",
    "canonical_order",
    "resolve_designator",
    "CertificateDocument",
    "write_certificate",
    "read_certificate",
]


class MalformedEncoding(GraphError):
    def __init__(self, msg: str, offset: int | None = None):
        self.offset = offset
        super().__init__(msg if offset is None else f"{msg} (byte {offset})")


class UnknownGraphDesignator(GraphError):
    pass


# --------------------------------------------------------------------------
# size field N(n) and 6-bit packing


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("order too large for graph6/sparse6")


def _decode_n(data: str, pos: int) -> tuple[int, int]:
    def six(i):
        if i >= len(data):
            raise MalformedEncoding("truncated size field", i)
        c = ord(data[i]) - 63
        if not 0 <= c <= 63:
            raise MalformedEncoding(f"invalid character {data[i]!r}", i)
        return c

    if pos >= len(data):
        raise MalformedEncoding("missing size field", pos)
    if data[pos] != "~":
        return six(pos), pos + 1
    if pos + 1 < len(data) and data[pos + 1] == "~":
        n = 0
        for i in range(pos + 2, pos + 8):
            n = (n << 6) | six(i)
        return n, pos + 8
    n = 0
    for i in range(pos + 1, pos + 4):
        n = (n << 6) | six(i)
    return n, pos + 4


def _pack(bits: list[int]) -> str:
    out = []
    for i in range(0, len(bits), 6):
        chunk = bits[i:i + 6]
        v = 0
        for b in chunk:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def _unpack(data: str, start: int) -> list[int]:
    bits = []
    for i in range(start, len(data)):
        v = ord(data[i]) - 63
        if not 0 <= v <= 63:
            raise MalformedEncoding(f"invalid character {data[i]!r}", i)
        bits.extend((v >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    return bits


def _strip(line: str, header: str) -> str:
    line = line.strip()
    if line.startswith(header):
        line = line[len(header):]
    return line


# --------------------------------------------------------------------------
# graph6


def parse_graph6(line: str) -> MultiGraph:
    data = _strip(line, ">>graph6<<")
    n, pos = _decode_n(data, 0)
    need = n * (n - 1) // 2
    nbytes = (need + 5) // 6
    if len(data) - pos != nbytes:
        raise MalformedEncoding(
            f"expected {nbytes} adjacency bytes for n={n}, found {len(data) - pos}",
            min(len(data), pos + nbytes),
        )
    bits = _unpack(data, pos)
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    return build(n, pairs)


def write_graph6(G: MultiGraph) -> str:
    if G.has_parallel_edges():
        raise ValueError("graph6 cannot represent parallel edges; use sparse6")
    adj = {(min(a, b), max(a, b)) for a, b in G.edges}
    bits = [1 if (i, j) in adj else 0 for j in range(1, G.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    return _encode_n(G.n) + _pack(bits)


# --------------------------------------------------------------------------
# sparse6


def _width(n: int) -> int:
    k = 1
    while (1 << k) < n:
        k += 1
    return k


def parse_sparse6(line: str) -> MultiGraph:
    """Decode a sparse6 line; edges are numbered in encoding order."""
    data = _strip(line, ">>sparse6<<")
    if not data.startswith(":"):
        raise MalformedEncoding("sparse6 line must start with ':'", 0)
    n, pos = _decode_n(data, 1)
    k = _width(n)
    bits = _unpack(data, pos)
    pairs = []
    v = 0
    i = 0
    while i + 1 + k <= len(bits):
        b = bits[i]
        x = 0
        for t in bits[i + 1:i + 1 + k]:
            x = (x << 1) | t
        i += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            # only the trailing padding may run past the last vertex
            break
        if x > v:
            v = x
        else:
            if x == v:
                raise LoopRejected(f"sparse6 encodes a loop at vertex {v}")
            pairs.append((x, v))
    return build(n, pairs)


def write_sparse6(G: MultiGraph) -> str:
    """Encode ``G``; edges are emitted sorted by (larger end, smaller end).

    Round-tripping therefore preserves vertex ids but renumbers edges into
    that canonical order; graphs built by this package with that order are
    reproduced exactly.
    """
    n = G.n
    k = _width(n)
    edges = sorted((max(a, b), min(a, b)) for a, b in G.edges)

    def enc(x):
        return [(x >> s) & 1 for s in range(k - 1, -1, -1)]

    bits: list[int] = []
    cur = 0
    for v, u in edges:
        if v == cur:
            bits.append(0)
            bits += enc(u)
        elif v == cur + 1:
            cur = v
            bits.append(1)
            bits += enc(u)
        else:
            cur = v
            bits.append(1)
            bits += enc(v)
            bits.append(0)
            bits += enc(u)
    # padding must not decode as an extra edge (see the nauty notes on k < 6)
    if k < 6 and n == (1 << k) and (-len(bits) % 6) >= k and cur < n - 1:
        bits.append(0)
    bits += [1] * (-len(bits) % 6)
    return ":" + _encode_n(n) + _pack(bits)


def canonical_order(G: MultiGraph) -> MultiGraph:
    """``G`` with edges renumbered in sparse6 emission order."""
    return build(G.n, [(u, v) for v, u in sorted((max(a, b), min(a, b)) for a, b in G.edges)])


# --------------------------------------------------------------------------
# edge list


def parse_edgelist(text: str) -> MultiGraph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("c")]
    if not rows:
        raise MalformedEncoding("empty edge list")
    try:
        n, m = (int(x) for x in rows[0])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise MalformedEncoding(f"bad edge list: {exc}") from None
    if len(pairs) != m:
        raise MalformedEncoding(f"header says {m} edges, found {len(pairs)}")
    return build(n, pairs)


def write_edgelist(G: MultiGraph) -> str:
    return "\n".join([f"{G.n} {G.m}"] + [f"{a} {b}" for a, b in G.edges]) + "\n"


# --------------------------------------------------------------------------
# graph designators: "@NAME", a sparse6 or graph6 line, or an edge list


def parse_graph(text: str) -> MultiGraph:
    """Parse a single graph in any supported text format."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("c ")]
    if not lines:
        raise MalformedEncoding("no graph found")
    first = lines[0]
    if first.startswith("@"):
        return resolve_designator(first)
    if first.startswith(":") or first.startswith(">>sparse6<<"):
        return parse_sparse6(first)
    if len(first.split()) == 2:
        return parse_edgelist("\n".join(lines))
    return parse_graph6(first)


def encode_graph(G: MultiGraph) -> str:
    """graph6 for simple graphs, sparse6 otherwise."""
    return write_sparse6(G) if G.has_parallel_edges() else write_graph6(G)


def resolve_designator(token: str) -> MultiGraph:
    token = token.strip()
    if token.startswith("@"):
        try:
            return named(token).graph
        except UnknownName as exc:
            raise UnknownGraphDesignator(str(exc)) from None
    if token.startswith(":"):
        return parse_sparse6(token)
    try:
        return parse_graph6(token)
    except MalformedEncoding:
        raise UnknownGraphDesignator(f"cannot interpret graph designator {token!r}") from None


# --------------------------------------------------------------------------
# certificates
#
#   c <free text>
#   g <designator of G>
#   h <designator of H>
#   map <edge of G> <edge of H>      one per edge of G
#   vmap <vertex of G> <vertex of H> optional


@dataclass
class CertificateDocument:
    g: str
    h: str
    mapping: EdgeMapping
    vertex_map: tuple[int, ...] | None = None
    comments: list[str] = field(default_factory=list)


def write_certificate(
    f: EdgeMapping,
    g_designator: str | None = None,
    h_designator: str | None = None,
    comments: Iterable[str] = (),
    with_vmap: bool = True,
) -> str:
    """Serialize a verified mapping.  Designators default to inline sparse6.

    An inline sparse6 designator renumbers edges, so it is only accepted
    when the graph's edges are already in sparse6 emission order.
    """
    rep = verify(f.source, f.target, f)
    if not rep.ok:
        raise NotACertificate(rep.message)
    g_des = g_designator or _inline(f.source)
    h_des = h_designator or _inline(f.target)
    lines = [f"c {c}" for c in comments]
    lines += [f"g {g_des}", f"h {h_des}"]
    lines += [f"map {e} {h}" for e, h in enumerate(f.image)]
    if with_vmap:
        vm = induced_vertex_map(f.source, f.target, f)
        lines += [f"vmap {v} {u}" for v, u in enumerate(vm.image)]
    return "\n".join(lines) + "\n"


def _inline(G: MultiGraph) -> str:
    if canonical_order(G) != G:
        raise ValueError(
            "graph edges are not in sparse6 order; pass a catalog designator "
            "or renumber with canonical_order() first"
        )
    return write_sparse6(G)


def read_certificate(
    text: str,
    resolve: Callable[[str], MultiGraph] = resolve_designator,
    graphs: tuple[MultiGraph, MultiGraph] | None = None,
) -> CertificateDocument:
    """Parse a certificate and re-verify it.

    The graphs come from the ``g``/``h`` designators unless ``graphs``
    supplies (G, H) explicitly.
    """
    g_des = h_des = None
    pairs: dict[int, int] = {}
    vpairs: dict[int, int] = {}
    comments = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "c" or line.startswith("c "):
            comments.append(line[2:])
            continue
        tag, _, rest = line.partition(" ")
        try:
            if tag == "g":
                g_des = rest.strip()
            elif tag == "h":
                h_des = rest.strip()
            elif tag == "map":
                e, h = (int(x) for x in rest.split())
                if e in pairs:
                    raise MalformedEncoding(f"line {lineno}: edge {e} mapped twice")
                pairs[e] = h
            elif tag == "vmap":
                v, u = (int(x) for x in rest.split())
                vpairs[v] = u
            else:
                raise MalformedEncoding(f"line {lineno}: unknown record {tag!r}")
        except ValueError as exc:
            if isinstance(exc, GraphError):
                raise
            raise MalformedEncoding(f"line {lineno}: {exc}") from None
    if graphs is not None:
        G, H = graphs
    elif g_des is None or h_des is None:
        raise UnknownGraphDesignator("certificate lacks a 'g' or 'h' line")
    else:
        G, H = resolve(g_des), resolve(h_des)
    missing = [e for e in range(G.m) if e not in pairs]
    extra = [e for e in pairs if not 0 <= e < G.m]
    if missing or extra:
        raise MappingNotTotal(f"unmapped edges {missing}, out-of-range edges {extra}")
    f = EdgeMapping(G, H, tuple(pairs[e] for e in range(G.m)))
    rep = verify(G, H, f)
    if not rep.ok:
        raise NotACertificate(rep.message)
    vmap = None
    if vpairs:
        vmap = tuple(vpairs.get(v, -1) for v in range(G.n))
        for v in range(G.n):
            st = frozenset(f.image[e] for e in G.incidence[v])
            if not 0 <= vmap[v] < H.n or frozenset(H.incidence[vmap[v]]) != st:
                raise NotACertificate(f"vmap entry for vertex {v} disagrees with the edge map")
    return CertificateDocument(g_des or "", h_des or "", f, vmap, comments)
