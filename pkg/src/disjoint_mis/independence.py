"""Exact independent-set machinery and the two-disjoint-maximum-independent-sets decision.

Everything here is exponential in the worst case, so each public entry point
takes a ``cap`` on the vertex count and raises ``CapExceeded`` instead of
running away.  Internally vertex sets are int bitmasks; the public API speaks
sorted tuples of vertex ids.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from itertools import combinations

from ._bits import iter_bits, members
from .errors import CapExceeded, GraphError
from .graph import Graph, VertexSet, bipartition_mask
from .matching import Matching, can_match_into, matching_number

DEFAULT_CAP = 30
EQUIVALENCE_CAP = 16
PAIR_THRESHOLD = 10_000


def check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapExceeded("vertex count", g.n, cap)


def is_independent_mask(g: Graph, mask: int) -> bool:
    return all(not g.adj[v] & mask for v in iter_bits(mask))


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    return is_independent_mask(g, g.mask(vertices))


def _require_independent(g: Graph, mask: int) -> None:
    if not is_independent_mask(g, mask):
        raise GraphError(f"{members(mask)} is not independent")


# maximal independent sets: Bron-Kerbosch with pivoting, on the complement


def visit_maximal(g: Graph, visit: Callable[[int], bool], within: int | None = None) -> bool:
    """Call ``visit(mask)`` on every maximal independent set of ``G[within]``.

    Stops early and returns ``True`` as soon as ``visit`` returns true.
    """
    closed = g.closed_masks()

    def rec(p: int, x: int, r: int) -> bool:
        if not p:
            return not x and visit(r)
        best = -1
        pivot_branch = p
        for u in iter_bits(p | x):
            cnt = (p & closed[u]).bit_count()
            if best < 0 or cnt < best:
                best = cnt
                pivot_branch = p & closed[u]
                if cnt <= 1:
                    break
        for v in iter_bits(pivot_branch):
            cv = closed[v]
            if rec(p & ~cv, x & ~cv, r | 1 << v):
                return True
            p &= ~(1 << v)
            x |= 1 << v
        return False

    return rec(g.vertex_mask if within is None else within, 0, 0)


def maximal_independent_masks(g: Graph, within: int | None = None) -> list[int]:
    out: list[int] = []
    visit_maximal(g, lambda r: out.append(r) or False, within)
    return out


def enumerate_maximal_independent_sets(g: Graph, cap: int = DEFAULT_CAP) -> list[VertexSet]:
    check_cap(g, cap)
    return sorted(members(r) for r in maximal_independent_masks(g))


# independence number


def alpha_mask(g: Graph, within: int | None = None) -> int:
    """``alpha(G[within])`` by branching on a maximum-degree vertex.

    Vertices of degree <= 1 are always taken (some maximum set contains
    them); a graph of maximum degree 2 is a union of cycles and is solved
    in closed form.
    """
    adj = g.adj
    memo: dict[int, int] = {}

    def rec(mask: int) -> int:
        if not mask:
            return 0
        hit = memo.get(mask)
        if hit is not None:
            return hit
        pick = -1
        top = -1
        for v in iter_bits(mask):
            d = (adj[v] & mask).bit_count()
            if d <= 1:
                res = 1 + rec(mask & ~(adj[v] | 1 << v))
                memo[mask] = res
                return res
            if d > top:
                top, pick = d, v
        if top == 2:
            res = 0
            rest = mask
            while rest:
                comp = front = rest & -rest
                while front:
                    grow = 0
                    for v in iter_bits(front):
                        grow |= adj[v]
                    front = grow & rest & ~comp
                    comp |= front
                res += comp.bit_count() // 2
                rest &= ~comp
        else:
            res = max(rec(mask & ~(1 << pick)), 1 + rec(mask & ~(adj[pick] | 1 << pick)))
        memo[mask] = res
        return res

    return rec(g.vertex_mask if within is None else within)


def alpha(g: Graph, cap: int = DEFAULT_CAP) -> int:
    check_cap(g, cap)
    return alpha_mask(g)


def visit_sets_of_size(g: Graph, target: int, visit: Callable[[int], bool], within: int | None = None) -> bool:
    """Visit every maximum independent set of ``G[within]``.

    ``target`` must equal ``alpha(G[within])``: the pivot rule only branches
    over a vertex and its neighbors, which is complete for maximal sets and
    therefore for maximum ones, but not for arbitrary sets of a given size.
    """
    closed = g.closed_masks()

    def rec(p: int, r: int, size: int) -> bool:
        if size == target:
            return visit(r)
        if size + p.bit_count() < target:
            return False
        best = -1
        branch = p
        for u in iter_bits(p):
            cnt = (p & closed[u]).bit_count()
            if best < 0 or cnt < best:
                best, branch = cnt, p & closed[u]
                if cnt <= 1:
                    break
        for v in iter_bits(branch):
            if rec(p & ~closed[v], r | 1 << v, size + 1):
                return True
            p &= ~(1 << v)
            if size + p.bit_count() < target:
                return False
        return False

    return rec(g.vertex_mask if within is None else within, 0, 0)


def maximum_independent_masks(g: Graph, within: int | None = None, limit: int | None = None) -> list[int]:
    """All maximum independent sets of ``G[within]``; raises ``CapExceeded`` past ``limit`` sets."""
    a = alpha_mask(g, within)
    out: list[int] = []

    def keep(r: int) -> bool:
        out.append(r)
        return limit is not None and len(out) > limit

    if visit_sets_of_size(g, a, keep, within):
        raise CapExceeded("maximum independent sets", len(out), limit)
    return sorted(out, key=members)


def one_maximum_independent_mask(g: Graph, within: int | None = None) -> int:
    a = alpha_mask(g, within)
    found: list[int] = []
    visit_sets_of_size(g, a, lambda r: found.append(r) or True, within)
    return found[0]


@dataclass(frozen=True)
class OmegaFamily:
    alpha: int
    sets: tuple[VertexSet, ...]
    core: VertexSet

    @property
    def size(self) -> int:
        return len(self.sets)

    def masks(self) -> list[int]:
        return [sum(1 << v for v in s) for s in self.sets]


def omega_family(g: Graph, cap: int = DEFAULT_CAP, omega_cap: int | None = None) -> OmegaFamily:
    check_cap(g, cap)
    masks = maximum_independent_masks(g, limit=omega_cap)
    core = g.vertex_mask
    for s in masks:
        core &= s
    a = masks[0].bit_count()
    return OmegaFamily(a, tuple(members(s) for s in masks), members(core))


# Berge's characterisation


def berge_verify(g: Graph, s: Iterable[int], cap: int = DEFAULT_CAP) -> bool:
    """True iff every independent set disjoint from ``S`` can be matched into ``S``.

    Only maximal independent sets of ``G - S`` are tested: a subset of a set
    that matches into ``S`` matches into ``S`` as well.
    """
    check_cap(g, cap)
    sm = g.mask(s)
    _require_independent(g, sm)
    failed = visit_maximal(g, lambda r: not can_match_into(g, r, sm), g.vertex_mask & ~sm)
    return not failed


# covering properties


def is_well_covered(g: Graph, cap: int = DEFAULT_CAP) -> bool:
    check_cap(g, cap)
    sizes: set[int] = set()

    def visit(r: int) -> bool:
        sizes.add(r.bit_count())
        return len(sizes) > 1

    return not visit_maximal(g, visit)


def is_very_well_covered(g: Graph, cap: int = DEFAULT_CAP) -> bool:
    if any(nb == 0 for nb in g.adj):
        return False
    return is_well_covered(g, cap) and g.n == 2 * alpha_mask(g)


def is_konig_egervary(g: Graph, cap: int = DEFAULT_CAP) -> bool:
    check_cap(g, cap)
    return alpha_mask(g) + matching_number(g) == g.n


# certificates


@dataclass(frozen=True)
class Certificate:
    """Witness for a two-disjoint-maximum-independent-sets verdict.

    ``kind`` is one of ``disjoint-pair``, ``alpha-matching-bipartite``,
    ``induced-bipartite-2alpha``, ``unicyclic-cycle-vertex``,
    ``konig-egervary`` or ``exhaustion``.  Payload values are JSON-ready.
    """

    verdict: bool
    kind: str
    payload: dict = field(default_factory=dict)

    def pair(self) -> tuple[VertexSet, VertexSet] | None:
        pair = self.payload.get("pair")
        return None if pair is None else (tuple(pair[0]), tuple(pair[1]))

    def to_json(self) -> dict:
        return {"verdict": "yes" if self.verdict else "no", "kind": self.kind, "payload": self.payload}


def _pair_certificate(a: int, s1: int, s2: int) -> Certificate:
    return Certificate(True, "disjoint-pair", {"alpha": a, "pair": [list(members(s1)), list(members(s2))]})


def has_two_disjoint_mis(
    g: Graph,
    strategy: str = "auto",
    cap: int = DEFAULT_CAP,
    pair_threshold: int = PAIR_THRESHOLD,
    omega_cap: int | None = None,
) -> Certificate:
    """Decide whether ``G`` has two disjoint maximum independent sets.

    ``omega-pairs`` scans pairs of maximum sets; ``condition-ii`` looks for a
    maximum set ``S`` with ``alpha(G - S) = alpha(G)``.  ``auto`` scans pairs
    unless the family is larger than ``pair_threshold``.  ``omega_cap``
    bounds the number of maximum sets enumerated.
    """
    if strategy not in ("auto", "omega-pairs", "condition-ii"):
        raise ValueError(f"unknown strategy {strategy!r}")
    check_cap(g, cap)
    a = alpha_mask(g)
    omega = maximum_independent_masks(g, limit=omega_cap)
    if strategy == "omega-pairs" or (strategy == "auto" and len(omega) <= pair_threshold):
        for i, s1 in enumerate(omega):
            for s2 in omega[i:]:
                if not s1 & s2:
                    return _pair_certificate(a, s1, s2)
        return Certificate(False, "exhaustion", {"alpha": a, "method": "omega-pairs", "omega_size": len(omega)})
    full = g.vertex_mask
    for s in omega:
        rest = full & ~s
        if alpha_mask(g, rest) == a:
            return _pair_certificate(a, s, one_maximum_independent_mask(g, rest))
    return Certificate(False, "exhaustion", {"alpha": a, "method": "condition-ii", "omega_size": len(omega)})


def _sides_ok(g: Graph, a_side: int, b_side: int) -> bool:
    return not a_side & b_side and is_independent_mask(g, a_side) and is_independent_mask(g, b_side)


def validate_certificate(g: Graph, cert: Certificate, cap: int = DEFAULT_CAP) -> bool:
    """Re-check a certificate against ``G`` from scratch.

    Yes-certificates are checked structurally (plus one ``alpha``
    computation); no-certificates are re-decided by the other enumeration
    strategy.
    """
    check_cap(g, cap)
    p = cert.payload
    a = alpha_mask(g)
    if p.get("alpha", a) != a:
        return False
    try:
        if cert.verdict:
            s1, s2 = g.mask(p["pair"][0]), g.mask(p["pair"][1])
            if not (_sides_ok(g, s1, s2) and s1.bit_count() == s2.bit_count() == a):
                return False
            if "matching" in p:
                m = Matching.from_pairs(p["matching"])
                if not m.is_matching_of(g):
                    return False
                if cert.kind == "alpha-matching-bipartite":
                    sa, sb = g.mask(p["sides"][0]), g.mask(p["sides"][1])
                    if m.size != a or (sa | sb) != g.mask(m.saturated) or not _sides_ok(g, sa, sb):
                        return False
            if cert.kind == "induced-bipartite-2alpha":
                sa, sb = g.mask(p["sides"][0]), g.mask(p["sides"][1])
                if (sa | sb).bit_count() != 2 * a or not _sides_ok(g, sa, sb):
                    return False
            if cert.kind == "unicyclic-cycle-vertex":
                v = p["vertex"]
                if v in p["pair"][0] or v in p["pair"][1] or v not in p["cycle"]:
                    return False
            return cert.kind in (
                "disjoint-pair",
                "alpha-matching-bipartite",
                "induced-bipartite-2alpha",
                "unicyclic-cycle-vertex",
            )
        if cert.kind == "konig-egervary":
            if a + matching_number(g) != g.n:
                return False
        other = "condition-ii" if p.get("method") == "omega-pairs" else "omega-pairs"
        return not has_two_disjoint_mis(g, strategy=other, cap=cap).verdict
    except (GraphError, KeyError, TypeError, IndexError):
        return False


# maximal (not necessarily maximum) pairs


def has_two_disjoint_maximal_is(g: Graph, cap: int = DEFAULT_CAP) -> tuple[VertexSet, VertexSet] | None:
    check_cap(g, cap)
    sets = sorted(maximal_independent_masks(g), key=members)
    for i, s1 in enumerate(sets):
        for s2 in sets[i:]:
            if not s1 & s2:
                return members(s1), members(s2)
    return None


# the five equivalent conditions


@dataclass(frozen=True)
class EquivalenceReport:
    alpha: int
    conditions: dict[str, bool]
    witnesses: dict[str, object]

    @property
    def consistent(self) -> bool:
        return len(set(self.conditions.values())) == 1

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "conditions": self.conditions, "witnesses": self.witnesses}


def _matchings_of_size(g: Graph, k: int, visit: Callable[[list[tuple[int, int]], int], bool]) -> bool:
    """DFS over matchings with ``k`` edges whose covered set still induces a bipartite graph."""
    edges = g.edges()
    chosen: list[tuple[int, int]] = []

    def rec(start: int, used: int) -> bool:
        if len(chosen) == k:
            return visit(chosen, used)
        if len(edges) - start < k - len(chosen):
            return False
        for i in range(start, len(edges)):
            u, v = edges[i]
            if used >> u & 1 or used >> v & 1:
                continue
            grown = used | 1 << u | 1 << v
            if bipartition_mask(g, grown) is None:
                continue
            chosen.append((u, v))
            if rec(i + 1, grown):
                return True
            chosen.pop()
        return False

    return rec(0, 0)


def equivalence_suite(g: Graph, cap: int = EQUIVALENCE_CAP) -> EquivalenceReport:
    """Evaluate the five equivalent conditions, each by its own search.

    (i) a disjoint pair in the maximum-set family; (ii) a maximum set ``S``
    with ``alpha(G - S) = alpha(G)``; (iii) a matching of size ``alpha``
    spanning an induced bipartite subgraph; (iv) an induced bipartite
    subgraph on ``2 alpha`` vertices; (v) a vertex set ``A`` whose removal
    leaves a bipartite graph with a perfect matching of size ``alpha``.
    """
    check_cap(g, cap)
    a = alpha_mask(g)
    omega = maximum_independent_masks(g)
    full = g.vertex_mask
    cond: dict[str, bool] = {}
    wit: dict[str, object] = {}

    cond["i"] = False
    for i, s1 in enumerate(omega):
        for s2 in omega[i:]:
            if not s1 & s2:
                cond["i"] = True
                wit["i"] = [list(members(s1)), list(members(s2))]
                break
        if cond["i"]:
            break

    cond["ii"] = False
    for s in omega:
        if alpha_mask(g, full & ~s) == a:
            cond["ii"] = True
            wit["ii"] = list(members(s))
            break

    found: list = []
    cond["iii"] = _matchings_of_size(g, a, lambda m, used: found.append(list(map(list, m))) or True)
    if cond["iii"]:
        wit["iii"] = found[0]

    cond["iv"] = False
    for combo in combinations(range(g.n), 2 * a):
        x = sum(1 << v for v in combo)
        sides = bipartition_mask(g, x)
        if sides is not None:
            cond["iv"] = True
            wit["iv"] = [list(members(sides[0])), list(members(sides[1]))]
            break

    cond["v"] = False
    for removed in range(full + 1):
        rest = full & ~removed
        if bipartition_mask(g, rest) is None:
            continue
        if rest.bit_count() == 2 * a and matching_number(g, rest) == a:
            cond["v"] = True
            wit["v"] = list(members(removed))
            break
    return EquivalenceReport(a, cond, wit)


def mu_ge_alpha_check(g: Graph, cap: int = DEFAULT_CAP) -> bool:
    """Holds when ``G`` has no disjoint maximum pair or ``mu(G) >= alpha(G)``."""
    cert = has_two_disjoint_mis(g, cap=cap)
    return not cert.verdict or matching_number(g) >= alpha_mask(g)


# induced odd-cycle coronas


def _induced_cycles(g: Graph, length: int, candidates: int) -> Iterable[list[int]]:
    """Chordless cycles of ``length`` inside ``candidates``, each reported once."""
    adj = g.adj
    for s in iter_bits(candidates):
        allowed = candidates & ~((1 << (s + 1)) - 1)
        path = [s]

        def extend(used: int) -> Iterable[list[int]]:
            last = path[-1]
            if len(path) == length:
                if adj[last] >> s & 1 and path[1] < path[-1]:
                    yield list(path)
                return
            inner = used & ~(1 << last) & ~(1 << s)
            for w in iter_bits(adj[last] & allowed & ~used):
                if adj[w] & inner:
                    continue
                closes = len(path) > 1 and adj[w] >> s & 1
                if closes and len(path) + 1 < length:
                    continue
                if not closes and len(path) + 1 == length:
                    continue
                path.append(w)
                yield from extend(used | 1 << w)
                path.pop()

        yield from extend(1 << s)


def contains_induced_corona_odd_cycle(
    g: Graph, k_max: int = 3, n_cap: int = 20
) -> dict | None:
    """Find an induced copy of ``C_{2k+1} o K_1`` for some ``1 <= k <= k_max``.

    Returns ``{"k", "cycle", "pendants"}`` where ``pendants[i]`` is the
    pendant attached to ``cycle[i]``, or ``None`` when no copy exists.
    """
    if g.n > n_cap:
        raise CapExceeded("vertex count", g.n, n_cap)
    if k_max > 3:
        raise CapExceeded("k_max", k_max, 3)
    adj = g.adj
    rich = sum(1 << v for v in range(g.n) if adj[v].bit_count() >= 3)
    for k in range(1, k_max + 1):
        length = 2 * k + 1
        if 2 * length > g.n:
            break
        for cyc in _induced_cycles(g, length, rich):
            cmask = sum(1 << c for c in cyc)
            pendants: list[int] = []

            def assign(i: int, used: int) -> bool:
                if i == length:
                    return True
                c = cyc[i]
                for p in iter_bits(adj[c] & ~cmask & ~used):
                    if adj[p] & cmask != 1 << c or adj[p] & used:
                        continue
                    pendants.append(p)
                    if assign(i + 1, used | 1 << p):
                        return True
                    pendants.pop()
                return False

            if assign(0, 0):
                return {"k": k, "cycle": cyc, "pendants": list(pendants)}
    return None


__all__ = [
    "Certificate",
    "DEFAULT_CAP",
    "EquivalenceReport",
    "OmegaFamily",
    "alpha",
    "alpha_mask",
    "berge_verify",
    "contains_induced_corona_odd_cycle",
    "enumerate_maximal_independent_sets",
    "equivalence_suite",
    "has_two_disjoint_maximal_is",
    "has_two_disjoint_mis",
    "is_independent",
    "is_konig_egervary",
    "is_very_well_covered",
    "is_well_covered",
    "maximal_independent_masks",
    "maximum_independent_masks",
    "mu_ge_alpha_check",
    "omega_family",
    "validate_certificate",
]
