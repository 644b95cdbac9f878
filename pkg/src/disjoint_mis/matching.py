"""Exact maximum-cardinality matching.

Bipartite graphs go through Hopcroft-Karp, general graphs through Edmonds'
blossom contraction.  The public ``max_matching_*`` functions return the
lexicographically smallest maximum matching (edges compared as sorted
``(u, v)`` pairs with ``u < v``) so certificates are reproducible;
``matching_number`` skips that canonicalisation when only the size matters.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ._bits import iter_bits, members, to_mask
from .errors import GraphError, PreconditionError
from .graph import Edge, Graph, VertexSet, bipartition_mask, components, is_forest


@dataclass(frozen=True)
class Matching:
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for u, v in self.edges:
            if u == v or u in seen or v in seen:
                raise GraphError(f"edges {self.edges} are not pairwise non-incident")
            seen.update((u, v))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> Matching:
        return cls(tuple(sorted((min(u, v), max(u, v)) for u, v in pairs)))

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def saturated(self) -> VertexSet:
        return tuple(sorted(v for e in self.edges for v in e))

    def mate(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out

    def is_matching_of(self, g: Graph) -> bool:
        return all(0 <= u < g.n and 0 <= v < g.n and g.adj[u] >> v & 1 for u, v in self.edges)

    def to_json(self) -> list[list[int]]:
        return [list(e) for e in self.edges]


# Hopcroft-Karp on an explicit left/right split


def _hopcroft_karp(left: Sequence[int], adj: Sequence[int], right_mask: int) -> dict[int, int]:
    """Maximum matching between ``left`` and vertices of ``right_mask``; returns mate map."""
    mate: dict[int, int] = {}
    inf = len(left) + 1
    while True:
        dist: dict[int, int] = {}
        queue = deque()
        for u in left:
            if u not in mate:
                dist[u] = 0
                queue.append(u)
        found = inf
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for w in iter_bits(adj[u] & right_mask):
                x = mate.get(w)
                if x is None:
                    found = min(found, dist[u] + 1)
                elif x not in dist:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        if found == inf:
            return mate

        def augment(u: int) -> bool:
            for w in iter_bits(adj[u] & right_mask):
                x = mate.get(w)
                if (x is None and dist[u] + 1 == found) or (
                    x is not None and dist.get(x) == dist[u] + 1 and augment(x)
                ):
                    mate[u] = w
                    mate[w] = u
                    return True
            dist[u] = inf
            return False

        for u in left:
            if u not in mate:
                augment(u)


def _check_bipartition(g: Graph, a: int, b: int) -> None:
    if a & b or a | b != g.vertex_mask:
        raise GraphError("bipartition sides must partition V(G)")
    for v in iter_bits(a):
        if g.adj[v] & a:
            raise GraphError(f"bipartition side A is not independent at vertex {v}")
    for v in iter_bits(b):
        if g.adj[v] & b:
            raise GraphError(f"bipartition side B is not independent at vertex {v}")


def _bipartite_size(g: Graph, a: int, b: int, alive: int) -> int:
    return len(_hopcroft_karp(members(a & alive), g.adj, b & alive)) // 2


# Edmonds' blossom algorithm


def _blossom_mate(g: Graph, alive: int | None = None) -> list[int]:
    n = g.n
    alive = g.vertex_mask if alive is None else alive
    nbrs = [members(g.adj[v] & alive) if alive >> v & 1 else () for v in range(n)]
    mate = [-1] * n
    for v in iter_bits(alive):
        if mate[v] == -1:
            for u in nbrs[v]:
                if mate[u] == -1:
                    mate[v], mate[u] = u, v
                    break

    for root in iter_bits(alive):
        if mate[root] != -1:
            continue
        base = list(range(n))
        parent = [-1] * n
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
            while base[v] != b:
                in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        end = -1
        while queue and end == -1:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur, to, in_blossom)
                    mark_path(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        end = to
                        break
                    used[mate[to]] = True
                    queue.append(mate[to])
        v = end
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v], mate[pv] = pv, v
            v = nxt
    return mate


def _mate_to_matching(mate: Sequence[int] | dict[int, int]) -> Matching:
    items = mate.items() if isinstance(mate, dict) else enumerate(mate)
    return Matching(tuple(sorted((u, w) for u, w in items if w is not None and w > u)))


def matching_number(g: Graph, alive: int | None = None) -> int:
    """``mu(G[alive])`` without canonicalising the witness."""
    alive = g.vertex_mask if alive is None else alive
    sides = bipartition_mask(g, alive)
    if sides is not None:
        return _bipartite_size(g, sides[0], sides[1], alive)
    return sum(1 for v, w in enumerate(_blossom_mate(g, alive)) if w > v)


def _lex_smallest(g: Graph, mu: int, size_of) -> Matching:
    chosen: list[Edge] = []
    alive = g.vertex_mask
    for u, v in g.edges():
        if len(chosen) == mu:
            break
        if not (alive >> u & 1 and alive >> v & 1):
            continue
        rest = alive & ~(1 << u | 1 << v)
        if size_of(rest) == mu - len(chosen) - 1:
            chosen.append((u, v))
            alive = rest
    return Matching(tuple(chosen))


def max_matching_bipartite(g: Graph, sides: tuple[Iterable[int], Iterable[int]] | None = None) -> Matching:
    """Maximum matching of a bipartite graph via Hopcroft-Karp.

    ``sides`` defaults to the canonical 2-colouring; a supplied pair is
    validated and ``GraphError`` raised if it is not a bipartition of ``G``.
    """
    if sides is None:
        found = bipartition_mask(g)
        if found is None:
            raise GraphError("graph is not bipartite")
        a, b = found
    else:
        a, b = to_mask(sides[0]), to_mask(sides[1])
        _check_bipartition(g, a, b)
    mu = _bipartite_size(g, a, b, g.vertex_mask)
    return _lex_smallest(g, mu, lambda alive: _bipartite_size(g, a, b, alive))


def max_matching_general(g: Graph) -> Matching:
    mu = matching_number(g)
    return _lex_smallest(g, mu, lambda alive: matching_number(g, alive))


def has_perfect_matching(g: Graph) -> Matching | None:
    """A perfect matching, or ``None``.  Callers test ``is not None``: n=0 yields an empty one."""
    if g.n % 2:
        return None
    if matching_number(g) * 2 != g.n:
        return None
    return max_matching_general(g)


@dataclass(frozen=True)
class ForestObstruction:
    """Why a forest has no perfect matching.

    ``kind`` is ``"odd-component"`` (``vertices`` = that component) or
    ``"stranded"`` (``vertices`` = the vertex left without partner, its
    former neighbors already matched elsewhere by the leaf rule).
    """

    kind: str
    vertices: VertexSet

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


def forest_matching(g: Graph, alive: int | None = None) -> tuple[Matching | None, ForestObstruction | None]:
    """Greedy leaf rule on the forest ``G[alive]``: match each leaf to its only neighbor."""
    alive = g.vertex_mask if alive is None else alive
    for comp in components(g, alive):
        if comp.bit_count() % 2:
            return None, ForestObstruction("odd-component", members(comp))
    deg = {v: (g.adj[v] & alive).bit_count() for v in iter_bits(alive)}
    leaves = sorted(v for v, d in deg.items() if d == 1)
    pairs: list[Edge] = []
    rest = alive
    while leaves:
        x = leaves.pop(0)
        if not rest >> x & 1:
            continue
        nb = g.adj[x] & rest
        if not nb:
            return None, ForestObstruction("stranded", (x,))
        y = (nb & -nb).bit_length() - 1
        pairs.append((min(x, y), max(x, y)))
        rest &= ~(1 << x | 1 << y)
        touched = []
        for z in iter_bits(g.adj[y] & rest):
            deg[z] -= 1
            if deg[z] == 0:
                return None, ForestObstruction("stranded", (z,))
            if deg[z] == 1:
                touched.append(z)
        if touched:
            leaves = sorted(set(leaves) | set(touched))
    if rest:
        # even components always expose a leaf; anything left is a cycle
        raise PreconditionError("forest_matching called on a graph with a cycle")
    return Matching(tuple(sorted(pairs))), None


def forest_perfect_matching(g: Graph) -> Matching | None:
    if not is_forest(g):
        raise PreconditionError("input graph has a cycle")
    return forest_matching(g)[0]


def match_into(g: Graph, a: Iterable[int], b: Iterable[int]) -> Matching | None:
    """A matching saturating ``A`` that uses only ``A``-``B`` edges, or ``None``."""
    am, bm = g.mask(a), g.mask(b)
    if am & bm:
        raise GraphError("A and B must be disjoint")
    left = members(am)
    mate = _hopcroft_karp(left, g.adj, bm)
    if any(u not in mate for u in left):
        return None
    return Matching.from_pairs((u, mate[u]) for u in left)


def can_match_into(g: Graph, a: int, b: int) -> bool:
    """Bitmask form of :func:`match_into` for hot loops; no validation."""
    if a.bit_count() > b.bit_count():
        return False
    return len(_hopcroft_karp(members(a), g.adj, b)) == 2 * a.bit_count()


__all__ = [
    "ForestObstruction",
    "Matching",
    "can_match_into",
    "forest_matching",
    "forest_perfect_matching",
    "has_perfect_matching",
    "match_into",
    "matching_number",
    "max_matching_bipartite",
    "max_matching_general",
]
