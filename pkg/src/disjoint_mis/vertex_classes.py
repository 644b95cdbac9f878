"""Leaves, simplicial, codominated and shedding vertices, and the shedding-set expansion."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from ._bits import iter_bits, members
from .errors import CapExceeded, GraphError, PreconditionError
from .graph import Graph, VertexSet
from .independence import DEFAULT_CAP, check_cap, is_independent_mask
from .matching import Matching


def leaves(g: Graph) -> VertexSet:
    return tuple(v for v in range(g.n) if g.adj[v].bit_count() == 1)


def simplicial_vertices(g: Graph) -> VertexSet:
    """Vertices whose closed neighborhood is a clique (isolated vertices included)."""
    out = []
    for v in range(g.n):
        nb = g.adj[v]
        if all((nb & ~(1 << u)) & ~g.adj[u] == 0 for u in iter_bits(nb)):
            out.append(v)
    return tuple(out)


def codominated_vertices(g: Graph) -> dict[int, int]:
    """Map each codominated vertex ``v`` to the smallest ``u != v`` with ``N[u] <= N[v]``."""
    closed = g.closed_masks()
    out = {}
    for v in range(g.n):
        for u in iter_bits(g.adj[v]):
            if closed[u] & ~closed[v] == 0:
                out[v] = u
                break
    return out


def _dominating_independent_exists(adj: list[int] | tuple[int, ...], closed: list[int], targets: int, cand: int) -> bool:
    """Is there an independent set inside ``cand`` with a neighbor of every target vertex?"""
    if not targets:
        return True
    best_u, best_opts = -1, 0
    for u in iter_bits(targets):
        opts = adj[u] & cand
        if not opts:
            return False
        if best_u < 0 or opts.bit_count() < best_opts.bit_count():
            best_u, best_opts = u, opts
    for s in iter_bits(best_opts):
        if _dominating_independent_exists(adj, closed, targets & ~adj[s], cand & ~closed[s]):
            return True
    return False


def is_shedding(g: Graph, v: int, closed: list[int] | None = None) -> bool:
    """``v`` is shedding unless some independent set of ``G - N[v]`` dominates ``N(v)``.

    Such a set extends by no neighbor of ``v``, and any independent set
    containing it does not either, so searching for one dominating set is the
    whole test.
    """
    closed = closed or g.closed_masks()
    nb = g.adj[v]
    if not nb:
        return False
    return not _dominating_independent_exists(g.adj, closed, nb, g.vertex_mask & ~closed[v])


def shedding_mask(g: Graph) -> int:
    closed = g.closed_masks()
    out = 0
    for v in range(g.n):
        if is_shedding(g, v, closed):
            out |= 1 << v
    return out


def shedding_vertices(g: Graph, cap: int = DEFAULT_CAP) -> VertexSet:
    check_cap(g, cap)
    return members(shedding_mask(g))


@dataclass(frozen=True)
class VertexClassification:
    leaves: VertexSet
    simplicial: VertexSet
    codominated: dict[int, int]
    shedding: VertexSet

    def to_json(self) -> dict:
        return {
            "leaves": list(self.leaves),
            "simplicial": list(self.simplicial),
            "codominated": {str(v): u for v, u in sorted(self.codominated.items())},
            "shedding": list(self.shedding),
        }


def classify(g: Graph, cap: int = DEFAULT_CAP) -> VertexClassification:
    return VertexClassification(leaves(g), simplicial_vertices(g), codominated_vertices(g), shedding_vertices(g, cap))


# shedding-set expansion


@dataclass(frozen=True)
class Expansion:
    """``I_A = (S - A) | B_A`` together with the matching ``x -> y`` from ``A`` into ``B_A``."""

    independent_set: VertexSet
    matching: Matching
    backtracked: bool = False


def _check_shedding_set(g: Graph, s: int, shed: int | None) -> int:
    if not is_independent_mask(g, s):
        raise GraphError(f"{members(s)} is not independent")
    shed = shedding_mask(g) if shed is None else shed
    if s & ~shed:
        raise PreconditionError(f"{members(s & ~shed)} are not shedding vertices")
    return shed


def _expand(g: Graph, s: int, a: int) -> tuple[int, list[tuple[int, int]], bool]:
    """Replace each ``x`` of ``A`` (ascending) by its smallest admissible neighbor.

    A neighbor ``y`` is admissible when it is outside the current set and
    adjacent to none of it.  If the greedy choice runs into a dead end the
    choices are revisited depth-first, still preferring small ids.
    """
    adj = g.adj
    order = members(a)
    pairs: list[tuple[int, int]] = []
    steps = [0]

    def rec(i: int, current: int) -> int | None:
        if i == len(order):
            return current
        x = order[i]
        for y in iter_bits(adj[x] & ~current):
            if adj[y] & current:
                continue
            steps[0] += 1
            pairs.append((x, y))
            res = rec(i + 1, current | 1 << y)
            if res is not None:
                return res
            pairs.pop()
        return None

    result = rec(0, s & ~a)
    if result is None:
        raise PreconditionError(f"no admissible expansion of A={order} inside S={members(s)}")
    return result, pairs, steps[0] > len(order)


def expand_shedding_subset(
    g: Graph, s: Iterable[int], a: Iterable[int], shed: Iterable[int] | None = None
) -> Expansion:
    sm, am = g.mask(s), g.mask(a)
    if am & ~sm:
        raise GraphError("A must be a subset of S")
    _check_shedding_set(g, sm, None if shed is None else g.mask(shed))
    result, pairs, backtracked = _expand(g, sm, am)
    return Expansion(members(result), Matching.from_pairs(pairs), backtracked)


def shedding_powerset_witnesses(
    g: Graph, s: Iterable[int], shed: Iterable[int] | None = None, max_size: int = 16
) -> list[VertexSet]:
    """``I_A`` for every ``A`` of ``S``, listed by the bitmask order of ``A`` within ``S``."""
    sm = g.mask(s)
    if sm.bit_count() > max_size:
        raise CapExceeded("|S|", sm.bit_count(), max_size)
    _check_shedding_set(g, sm, None if shed is None else g.mask(shed))
    verts = members(sm)
    out = []
    for code in range(1 << len(verts)):
        a = sum(1 << verts[i] for i in range(len(verts)) if code >> i & 1)
        out.append(members(_expand(g, sm, a)[0]))
    return out


def disjoint_maximal_from_shedding(
    g: Graph, s: Iterable[int], shed: Iterable[int] | None = None
) -> tuple[VertexSet, Matching]:
    """A maximal independent set ``U`` disjoint from ``S`` and a matching of ``S`` into it.

    ``U`` is ``I_S`` grown greedily in ascending vertex order.
    """
    sm = g.mask(s)
    _check_shedding_set(g, sm, None if shed is None else g.mask(shed))
    u, pairs, _ = _expand(g, sm, sm)
    for v in range(g.n):
        if not (u >> v & 1) and not g.adj[v] & u:
            u |= 1 << v
    return members(u), Matching.from_pairs(pairs)


__all__ = [
    "Expansion",
    "VertexClassification",
    "classify",
    "codominated_vertices",
    "disjoint_maximal_from_shedding",
    "expand_shedding_subset",
    "is_shedding",
    "leaves",
    "shedding_mask",
    "shedding_powerset_witnesses",
    "shedding_vertices",
    "simplicial_vertices",
]
