"""Immutable simple undirected graphs on vertices ``0..n-1``.

Adjacency is held as one int bitmask per vertex.  Every operation that
removes vertices returns the new graph together with ``ids``, the tuple of
original vertex ids in new-id order, so results can be reported against the
input graph.

Canonical numbering of the generators:

* ``path(n)``: ``0-1-...-(n-1)``
* ``cycle(n)``: ``0-1-...-(n-1)-0``
* ``complete_bipartite(p, q)``: sides ``0..p-1`` and ``p..p+q-1``
* ``star(p)``: center ``0``, leaves ``1..p``
* ``friendship(q)``: center ``0``, triangles ``{0, 2i+1, 2i+2}``
* ``corona(G, Hs)``: vertices of ``G`` keep their ids, then the copy of
  ``Hs[0]``, then the copy of ``Hs[1]``, and so on.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from ._bits import iter_bits, members, to_mask
from .errors import GraphError, ParseError

VertexSet = tuple[int, ...]
Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full or nb < 0:
                raise GraphError(f"vertex {v} has a neighbor outside [0, {self.n})")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], label: str = "") -> Graph:
        if n < 0:
            raise GraphError("negative vertex count")
        adj = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), label)

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def neighbors(self, v: int) -> VertexSet:
        self.check_vertex(v)
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def closed_masks(self) -> list[int]:
        return [nb | 1 << v for v, nb in enumerate(self.adj)]

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"vertex {v!r} out of range for n={self.n}")

    def mask(self, vertices: Iterable[int]) -> int:
        """Bitmask of ``vertices`` after range-checking every id."""
        out = 0
        for v in vertices:
            self.check_vertex(v)
            out |= 1 << v
        return out

    def with_label(self, label: str) -> Graph:
        return Graph(self.n, self.adj, label)

    def __repr__(self) -> str:
        tag = f" {self.label!r}" if self.label else ""
        return f"<Graph{tag} n={self.n} m={self.m} g6={to_graph6(self)}>"


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise GraphError("negative vertex count")
    return Graph(n, (0,) * n, f"{n}K1" if n != 1 else "K1")


def _induced(g: Graph, mask: int) -> tuple[Graph, VertexSet]:
    ids = members(mask)
    pos = {v: i for i, v in enumerate(ids)}
    adj = []
    for v in ids:
        row = 0
        for u in iter_bits(g.adj[v] & mask):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph(len(ids), tuple(adj)), ids


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, VertexSet]:
    """``G[X]``, renumbered ``0..|X|-1`` in ascending order of original id."""
    return _induced(g, g.mask(vertices))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, VertexSet]:
    return _induced(g, g.vertex_mask & ~g.mask(vertices))


def delete_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    adj = list(g.adj)
    for u, v in edges:
        if not g.has_edge(u, v):
            raise GraphError(f"{u}-{v} is not an edge")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.adj + tuple(nb << shift for nb in g2.adj))


def copies(g: Graph, q: int) -> Graph:
    """``qG``: ``q`` disjoint copies, copy ``i`` occupying ids ``i*n .. i*n+n-1``."""
    if q < 1:
        raise GraphError("copies needs q >= 1")
    out = g
    for _ in range(q - 1):
        out = disjoint_union(out, g)
    return out.with_label(f"{q}{g.label}" if g.label and q > 1 else g.label)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def corona(g: Graph, family: Sequence[Graph]) -> Graph:
    """Attach a copy of ``family[v]`` to each vertex ``v``, joined completely to ``v``."""
    if len(family) != g.n:
        raise GraphError(f"corona needs {g.n} graphs, got {len(family)}")
    edges = list(g.edges())
    offset = g.n
    for v, h in enumerate(family):
        edges.extend((offset + a, offset + b) for a, b in h.edges())
        edges.extend((v, offset + a) for a in range(h.n))
        offset += h.n
    return Graph.from_edges(offset, edges)


def corona_uniform(g: Graph, h: Graph) -> Graph:
    out = corona(g, [h] * g.n)
    if g.label and h.label:
        out = out.with_label(f"{g.label}o{h.label}")
    return out


# generators


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)), f"K{n}")


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise GraphError("complete bipartite graph needs p, q >= 1")
    return Graph.from_edges(p + q, [(a, p + b) for a in range(p) for b in range(q)], f"K{p},{q}")


def star(p: int) -> Graph:
    if p < 1:
        raise GraphError("star needs p >= 1")
    return complete_bipartite(1, p).with_label(f"K1,{p}")


def friendship(q: int) -> Graph:
    if q < 1:
        raise GraphError("friendship graph needs q >= 1")
    return corona(complete(1), [copies(complete(2), q)]).with_label(f"F{q}")


# neighborhoods


def neighborhood(g: Graph, v: int) -> VertexSet:
    return g.neighbors(v)


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    g.check_vertex(v)
    return members(g.adj[v] | 1 << v)


def neighborhood_mask(g: Graph, mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= g.adj[v]
    return out


def neighborhood_set(g: Graph, vertices: Iterable[int]) -> VertexSet:
    """``N(A)``: every vertex with at least one neighbor in ``A``."""
    return members(neighborhood_mask(g, g.mask(vertices)))


def closed_neighborhood_set(g: Graph, vertices: Iterable[int]) -> VertexSet:
    a = g.mask(vertices)
    return members(neighborhood_mask(g, a) | a)


# structure


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``G[within]`` as bitmasks, ordered by smallest vertex."""
    rest = g.vertex_mask if within is None else within
    out = []
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= g.adj[v]
            frontier = grow & rest & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def _two_color(g: Graph, within: int) -> tuple[int, int, Edge | None, list[int]]:
    """BFS 2-colouring of ``G[within]``; returns (side A, side B, conflict edge, parents)."""
    side = [-1] * g.n
    parent = [-1] * g.n
    a = b = 0
    for root in iter_bits(within):
        if side[root] != -1:
            continue
        side[root] = 0
        a |= 1 << root
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in iter_bits(g.adj[v] & within):
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    parent[u] = v
                    if side[u]:
                        b |= 1 << u
                    else:
                        a |= 1 << u
                    queue.append(u)
                elif side[u] == side[v]:
                    return a, b, (min(u, v), max(u, v)), parent
    return a, b, None, parent


def bipartition_mask(g: Graph, within: int | None = None) -> tuple[int, int] | None:
    a, b, conflict, _ = _two_color(g, g.vertex_mask if within is None else within)
    return None if conflict else (a, b)


def bipartition(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """Sides ``(A, B)`` of a 2-colouring, or ``None`` when an odd cycle exists.

    Each component's smallest vertex goes to ``A``, so isolated vertices
    always land in ``A``.
    """
    sides = bipartition_mask(g)
    return None if sides is None else (members(sides[0]), members(sides[1]))


def is_bipartite(g: Graph) -> bool:
    return bipartition_mask(g) is not None


def odd_cycle(g: Graph) -> list[int] | None:
    """An odd cycle (vertex list in order) witnessing non-bipartiteness, else ``None``."""
    _, _, conflict, parent = _two_color(g, g.vertex_mask)
    if conflict is None:
        return None
    u, v = conflict
    up = [u]
    while parent[up[-1]] != -1:
        up.append(parent[up[-1]])
    vp = [v]
    while parent[vp[-1]] != -1:
        vp.append(parent[vp[-1]])
    # both walks end at the BFS root; trim the shared tail down to the meeting point
    while len(up) > 1 and len(vp) > 1 and up[-2] == vp[-2]:
        up.pop()
        vp.pop()
    return up + vp[-2::-1]


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for u in iter_bits(g.adj[v]):
                if dist[u] == -1:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def unique_cycle(g: Graph) -> list[int] | None:
    """The cycle of a connected graph with ``m == n``, in walking order.

    The walk starts at the smallest cycle vertex and continues towards its
    smaller cycle neighbor.  Returns ``None`` for any other graph.
    """
    if g.n < 3 or g.m != g.n or not is_connected(g):
        return None
    alive = g.vertex_mask
    deg = g.degrees()
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        alive &= ~(1 << v)
        for u in iter_bits(g.adj[v] & alive):
            deg[u] -= 1
            if deg[u] == 1:
                stack.append(u)
    start = (alive & -alive).bit_length() - 1
    order = [start]
    prev, cur = start, min(iter_bits(g.adj[start] & alive))
    while cur != start:
        order.append(cur)
        nxt = [u for u in iter_bits(g.adj[cur] & alive) if u != prev]
        prev, cur = cur, nxt[0]
    return order


# graph6


def _g6_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    raise GraphError("graph6 supports n <= 258047")


def to_graph6(g: Graph) -> str:
    bits = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3 | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5]))
        for k in range(0, len(bits), 6)
    )
    return _g6_size(g.n) + body


def parse_graph6(text: str, label: str = "") -> Graph:
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise ParseError("empty graph6 string")
    for ch in line:
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"graph6 byte {ch!r} outside 63..126")
    data = [ord(ch) - 63 for ch in line]
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] != 63:
        n = data[1] << 12 | data[2] << 6 | data[3]
        pos = 4
        if n < 63:
            raise ParseError("long graph6 header used for n < 63")
    else:
        raise ParseError("malformed graph6 length header")
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    bits = [c >> s & 1 for c in body for s in range(5, -1, -1)]
    if any(bits[nbits:]):
        raise ParseError("nonzero graph6 padding bits")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj), label)


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    out = []
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(parse_graph6(line))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return out


# edge lists


def parse_edge_list(text: str, label: str = "") -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line; duplicates collapse."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty edge list")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise ParseError(f"edge list must start with 'n <count>', got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise ParseError(f"unparsable vertex count {head[1]!r}") from None
    if n < 0:
        raise ParseError("negative vertex count")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"unparsable edge {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge {ln!r} out of range for n={n}")
        if u == v:
            raise ParseError(f"self-loop {ln!r}")
        edges.append((u, v))
    return Graph.from_edges(n, edges, label)


def to_edge_list(g: Graph) -> str:
    return "\n".join([f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def parse_graph(text: str, label: str = "") -> Graph:
    """Accept either an edge list (first token ``n``) or a single graph6 line."""
    stripped = text.strip()
    if stripped.split(None, 1)[:1] == ["n"]:
        return parse_edge_list(stripped, label)
    return parse_graph6(stripped, label)


_DOT_COLORS = ("red", "blue", "forestgreen", "orange", "purple", "brown")


def to_dot(g: Graph, highlight: Mapping[str, Iterable[int]] | None = None, name: str = "G") -> str:
    """Render as an undirected DOT ``graph``; each highlighted set gets its own colour."""
    lines = [f"graph {name} {{"]
    color_of: dict[int, tuple[str, str]] = {}
    for k, (set_name, verts) in enumerate((highlight or {}).items()):
        color = _DOT_COLORS[k % len(_DOT_COLORS)]
        for v in verts:
            g.check_vertex(v)
            color_of.setdefault(v, (set_name, color))
    for v in range(g.n):
        if v in color_of:
            set_name, color = color_of[v]
            lines.append(f'  {v} [style=filled, fillcolor={color}, tooltip="{set_name}"];')
        else:
            lines.append(f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "Edge",
    "Graph",
    "VertexSet",
    "bipartition",
    "bipartition_mask",
    "closed_neighborhood",
    "closed_neighborhood_set",
    "complement",
    "complete",
    "complete_bipartite",
    "components",
    "copies",
    "corona",
    "corona_uniform",
    "cycle",
    "delete_edges",
    "delete_vertices",
    "disjoint_union",
    "empty_graph",
    "friendship",
    "girth",
    "induced_subgraph",
    "is_bipartite",
    "is_connected",
    "is_forest",
    "is_tree",
    "neighborhood",
    "neighborhood_mask",
    "neighborhood_set",
    "odd_cycle",
    "parse_edge_list",
    "parse_graph",
    "parse_graph6",
    "path",
    "read_graph6_lines",
    "star",
    "to_dot",
    "to_edge_list",
    "to_graph6",
    "to_mask",
    "unique_cycle",
]
