"""Naive reference implementations used to cross-check the fast paths.

Each one follows a definition literally (all subsets, all matchings, all
paths) and shares no search code with the modules it checks.  Only usable
for small graphs, roughly ``n <= 12``.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph


def independent_masks(g: Graph, within: int | None = None) -> list[int]:
    """Every independent subset of ``within``, by testing all ``2^n`` subsets."""
    within = g.vertex_mask if within is None else within
    adj = g.adj
    out = []
    for s in range(1 << g.n):
        if s & ~within:
            continue
        if all(not (s >> v & 1) or not adj[v] & s for v in range(g.n)):
            out.append(s)
    return out


def alpha(g: Graph) -> int:
    return max(s.bit_count() for s in independent_masks(g))


def omega(g: Graph) -> list[int]:
    sets = independent_masks(g)
    a = max(s.bit_count() for s in sets)
    return sorted(s for s in sets if s.bit_count() == a)


def core(g: Graph) -> int:
    out = g.vertex_mask
    for s in omega(g):
        out &= s
    return out


def maximal_masks(g: Graph) -> list[int]:
    sets = independent_masks(g)
    return sorted(s for s in sets if all(s & t != s or s == t for t in sets))


def count_independent_of_size(g: Graph, k: int) -> int:
    return sum(1 for s in independent_masks(g) if s.bit_count() == k)


def matching_number(g: Graph) -> int:
    """Either the lowest vertex stays unmatched or it pairs with one of its neighbors."""
    memo: dict[int, int] = {}

    def best(alive: int) -> int:
        if alive in memo:
            return memo[alive]
        if not alive:
            return 0
        v = (alive & -alive).bit_length() - 1
        rest = alive & ~(1 << v)
        res = best(rest)
        for u in range(g.n):
            if rest >> u & 1 and g.has_edge(u, v):
                res = max(res, 1 + best(rest & ~(1 << u)))
        memo[alive] = res
        return res

    return best(g.vertex_mask)


def min_vertex_cover(g: Graph) -> int:
    edges = g.edges()
    for r in range(g.n + 1):
        for combo in combinations(range(g.n), r):
            cover = set(combo)
            if all(u in cover or v in cover for u, v in edges):
                return r
    return g.n


def hall_condition(g: Graph, a: list[int], b: list[int]) -> bool:
    """Every subset of ``A`` has at least as many neighbors in ``B``."""
    bset = set(b)
    for r in range(1, len(a) + 1):
        for combo in combinations(a, r):
            nb = {u for x in combo for u in range(g.n) if g.has_edge(x, u) and u in bset}
            if len(nb) < r:
                return False
    return True


def is_shedding(g: Graph, v: int) -> bool:
    """Every independent set of ``G - N[v]`` extends by some neighbor of ``v``."""
    nbrs = [u for u in range(g.n) if g.has_edge(u, v)]
    outside = g.vertex_mask & ~(g.adj[v] | 1 << v)
    for s in independent_masks(g, outside):
        if not any(not g.adj[u] & s for u in nbrs):
            return False
    return True


def shedding(g: Graph) -> int:
    return sum(1 << v for v in range(g.n) if is_shedding(g, v))


def two_disjoint_mis(g: Graph) -> bool:
    sets = omega(g)
    return any(not s & t for s in sets for t in sets)


def on_five_cycle(g: Graph, v: int) -> bool:
    """Is ``v`` on some (not necessarily induced) cycle of length 5?"""

    def walk(path: list[int]) -> bool:
        if len(path) == 5:
            return g.has_edge(path[-1], v)
        return any(walk(path + [u]) for u in range(g.n) if g.has_edge(path[-1], u) and u not in path)

    return walk([v])


def is_bipartite(g: Graph) -> bool:
    for r in range(g.n + 1):
        for combo in combinations(range(g.n), r):
            side = set(combo)
            if all((u in side) != (v in side) for u, v in g.edges()):
                return True
    return g.n == 0


def cycle_rank(g: Graph) -> int:
    """``m - n + c``, the dimension of the cycle space."""
    seen: set[int] = set()
    comps = 0
    for s in range(g.n):
        if s in seen:
            continue
        comps += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for u in range(g.n):
                if g.has_edge(x, u) and u not in seen:
                    seen.add(u)
                    stack.append(u)
    return g.m - g.n + comps
