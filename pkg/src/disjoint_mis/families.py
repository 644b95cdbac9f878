"""Special graph classes: unicyclic decisions, tree shedding structure, Koenig-Egervary
counting, coronas, edge-alpha-critical graphs and the conjecture search harness.

The ``*_check`` functions evaluate a theorem on one graph and return whether
it held; they raise ``PreconditionError`` when the graph is outside the
theorem's class.
"""

from __future__ import annotations

import itertools
import random
import time
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from ._bits import iter_bits, members
from .catalog import all_labeled_trees, load_catalog, random_graph, random_unicyclic, read_catalog_file
from .errors import PreconditionError, StrategyMismatch
from .graph import (
    Graph,
    VertexSet,
    bipartition_mask,
    complement,
    components,
    cycle,
    delete_edges,
    girth,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_tree,
    odd_cycle,
    to_graph6,
    unique_cycle,
)
from .independence import (
    DEFAULT_CAP,
    Certificate,
    alpha_mask,
    check_cap,
    has_two_disjoint_mis,
    is_konig_egervary,
    is_very_well_covered,
    is_well_covered,
    maximal_independent_masks,
    maximum_independent_masks,
    omega_family,
)
from .matching import forest_matching, matching_number, max_matching_bipartite
from .vertex_classes import shedding_mask

# unicyclic graphs


@dataclass(frozen=True)
class UnicyclicDecomposition:
    """The cycle, its attachment vertices ``N1(C)`` and the pendant subtree ``T_x`` of each.

    ``subtrees[x]`` is ``(T_x, ids)`` with ``ids`` mapping ``T_x`` ids back to ``G``.
    """

    cycle: list[int]
    attachments: VertexSet
    subtrees: dict[int, tuple[Graph, VertexSet]]


def _require_unicyclic(g: Graph) -> list[int]:
    cyc = unique_cycle(g)
    if cyc is None:
        raise PreconditionError("graph is not unicyclic (connected with m == n)")
    return cyc


def unicyclic_decompose(g: Graph) -> UnicyclicDecomposition:
    cyc = _require_unicyclic(g)
    cmask = sum(1 << c for c in cyc)
    attach = sum(1 << v for v in range(g.n) if not cmask >> v & 1 and g.adj[v] & cmask)
    subtrees = {}
    # deleting the bridge xy leaves x's side free of cycle vertices, so T_x is
    # x's component in G - V(C)
    for comp in components(g, g.vertex_mask & ~cmask):
        x = members(comp & attach)
        if len(x) != 1:
            raise PreconditionError("component off the cycle must hang from exactly one vertex")
        subtrees[x[0]] = induced_subgraph(g, members(comp))
    return UnicyclicDecomposition(cyc, members(attach), dict(sorted(subtrees.items())))


def forest_alpha(g: Graph, alive: int) -> int:
    """Independence number of the forest ``G[alive]`` by repeatedly taking a leaf or isolated vertex."""
    size = 0
    while alive:
        for v in iter_bits(alive):
            if (g.adj[v] & alive).bit_count() <= 1:
                size += 1
                alive &= ~(g.adj[v] | 1 << v)
                break
        else:
            raise PreconditionError("forest_alpha called on a graph with a cycle")
    return size


def unicyclic_alpha(g: Graph, cyc: list[int] | None = None) -> int:
    """``alpha`` in polynomial time: branch on one cycle vertex, both sides are forests."""
    cyc = cyc or _require_unicyclic(g)
    c = cyc[0]
    full = g.vertex_mask
    return max(forest_alpha(g, full & ~(1 << c)), 1 + forest_alpha(g, full & ~(g.adj[c] | 1 << c)))


def unicyclic_two_disjoint_mis(g: Graph) -> Certificate:
    """Polynomial decision for unicyclic graphs.

    * bipartite: yes iff a perfect matching exists, the two colour classes
      being the pair;
    * non-bipartite Koenig-Egervary: never (such a pair forces bipartiteness);
    * otherwise: yes iff deleting some cycle vertex ``v`` leaves a forest
      with a perfect matching, whose colour classes are then the pair.

    The middle case matters: a cycle vertex whose removal leaves a forest
    with a perfect matching does not suffice on its own when
    ``alpha + mu = n`` (for example ``C_3`` with pendants at two vertices).
    """
    cyc = _require_unicyclic(g)
    full = g.vertex_mask
    mu = matching_number(g)
    sides = bipartition_mask(g)
    if sides is not None:
        a = g.n - mu
        if 2 * mu == g.n:
            m = max_matching_bipartite(g)
            pair = [list(members(sides[0])), list(members(sides[1]))]
            return Certificate(
                True, "alpha-matching-bipartite", {"alpha": a, "matching": m.to_json(), "sides": pair, "pair": pair}
            )
        return Certificate(
            False, "konig-egervary", {"alpha": a, "mu": mu, "reason": "bipartite without a perfect matching"}
        )
    a = unicyclic_alpha(g, cyc)
    if a + mu == g.n:
        return Certificate(
            False,
            "konig-egervary",
            {"alpha": a, "mu": mu, "reason": "non-bipartite Koenig-Egervary graph", "odd_cycle": odd_cycle(g)},
        )
    obstructions = {}
    for v in cyc:
        rest = full & ~(1 << v)
        m, why = forest_matching(g, rest)
        if m is not None:
            left, right = bipartition_mask(g, rest)
            return Certificate(
                True,
                "unicyclic-cycle-vertex",
                {
                    "alpha": a,
                    "cycle": list(cyc),
                    "vertex": v,
                    "matching": m.to_json(),
                    "pair": [list(members(left)), list(members(right))],
                },
            )
        obstructions[str(v)] = why.to_json()
    return Certificate(
        False, "unicyclic-cycle-vertex", {"alpha": a, "mu": mu, "cycle": list(cyc), "obstructions": obstructions}
    )


def literal_unicyclic_verdict(g: Graph) -> bool:
    """The unicyclic criterion read word for word, without the Koenig-Egervary proviso.

    Kept to document where it disagrees with the exact answer.
    """
    cyc = _require_unicyclic(g)
    if is_bipartite(g) and 2 * matching_number(g) == g.n:
        return True
    return any(forest_matching(g, g.vertex_mask & ~(1 << v))[0] is not None for v in cyc)


def _require_non_ke(g: Graph) -> None:
    if is_konig_egervary(g):
        raise PreconditionError("graph is Koenig-Egervary; the statement covers non-KE unicyclic graphs only")


def _core_mask(g: Graph, within: int | None = None) -> int:
    core = g.vertex_mask if within is None else within
    for s in maximum_independent_masks(g, within):
        core &= s
    return core


def unicyclic_core_union_check(g: Graph) -> bool:
    """``core(G)`` equals the union of the cores of the pendant subtrees."""
    dec = unicyclic_decompose(g)
    _require_non_ke(g)
    union = 0
    for x, (t, ids) in dec.subtrees.items():
        for v in omega_family(t).core:
            union |= 1 << ids[v]
    return _core_mask(g) == union


def unicyclic_subtree_projection_check(g: Graph) -> bool:
    """``W`` is maximum in ``T_x`` iff ``W = S & V(T_x)`` for some maximum ``S`` of ``G``."""
    dec = unicyclic_decompose(g)
    _require_non_ke(g)
    omega = maximum_independent_masks(g)
    for x, (t, ids) in dec.subtrees.items():
        vx = sum(1 << v for v in ids)
        local = {sum(1 << ids[v] for v in s) for s in omega_family(t).sets}
        projected = {s & vx for s in omega}
        if local != projected:
            return False
    return True


def unicyclic_pair_cycle_count_check(g: Graph) -> bool:
    """Both members of any disjoint maximum pair meet the cycle in ``(|C| - 1) / 2`` vertices."""
    cyc = _require_unicyclic(g)
    _require_non_ke(g)
    cmask = sum(1 << c for c in cyc)
    want = (len(cyc) - 1) // 2
    omega = maximum_independent_masks(g)
    for i, s1 in enumerate(omega):
        for s2 in omega[i + 1:]:
            if not s1 & s2 and not ((s1 & cmask).bit_count() == (s2 & cmask).bit_count() == want):
                return False
    return True


def unicyclic_alpha_mu_range_check(g: Graph) -> bool:
    _require_unicyclic(g)
    total = alpha_mask(g) + matching_number(g)
    return g.n - 1 <= total <= g.n


# trees


def _require_tree(g: Graph) -> None:
    if not is_tree(g):
        raise PreconditionError("graph is not a tree")


def _is_k2(g: Graph) -> bool:
    return g.n == 2 and g.m == 1


def tree_shed_structure_check(t: Graph) -> bool:
    """Shedding structure of a tree.

    (a) for ``T != K2``, a maximal independent set lies inside ``Shed(T)``
    only if it equals ``Shed(T)``; (b) some maximum independent set lies
    inside ``Shed(T)`` iff ``T = K2``; (c) ``Shed(T)`` is the set of
    neighbors of leaves.
    """
    _require_tree(t)
    shed = shedding_mask(t)
    leaf_nbrs = 0
    for v in range(t.n):
        if t.adj[v].bit_count() == 1:
            leaf_nbrs |= t.adj[v]
    if shed != leaf_nbrs:
        return False
    k2 = _is_k2(t)
    if not k2:
        for s in maximal_independent_masks(t):
            if (s & ~shed == 0) != (s == shed):
                return False
    inside = any(s & ~shed == 0 for s in maximum_independent_masks(t))
    return inside == k2


def tree_shed_bounds_check(t: Graph) -> bool:
    """``|Shed(T)| <= alpha(T)``, and ``<= alpha(T) - 1`` when ``Shed(T)`` is independent."""
    _require_tree(t)
    if _is_k2(t):
        raise PreconditionError("bounds are stated for trees other than K2")
    shed = shedding_mask(t)
    a = alpha_mask(t)
    size = shed.bit_count()
    if size > a:
        return False
    independent = all(not t.adj[v] & shed for v in iter_bits(shed))
    return not independent or size <= a - 1


def spider(p: int) -> Graph:
    """``K_{1,p}`` with one extra pendant on each leaf: center 0, legs ``i -> p + i``."""
    if p < 1:
        raise ValueError("spider needs p >= 1")
    edges = [(0, i) for i in range(1, p + 1)] + [(i, p + i) for i in range(1, p + 1)]
    return Graph.from_edges(2 * p + 1, edges, f"spider{p}")


# Koenig-Egervary graphs


def _require_ke(g: Graph) -> None:
    if not is_konig_egervary(g):
        raise PreconditionError("graph is not Koenig-Egervary")


def is_matching_graph(g: Graph) -> bool:
    """Every component is a single edge, i.e. ``G = q K2``."""
    return all(comp.bit_count() == 2 for comp in components(g)) and g.m * 2 == g.n


def ke_two_disjoint_check(g: Graph) -> bool:
    """Disjoint maximum pair iff bipartite with a perfect matching; the pair then covers ``V``."""
    _require_ke(g)
    cert = has_two_disjoint_mis(g)
    expected = is_bipartite(g) and 2 * matching_number(g) == g.n
    if cert.verdict != expected:
        return False
    if cert.verdict:
        s1, s2 = cert.pair()
        return len(s1) + len(s2) == g.n and not set(s1) & set(s2)
    return True


def ke_omega_bound_check(g: Graph) -> bool:
    _require_ke(g)
    a = alpha_mask(g)
    count = len(maximum_independent_masks(g))
    return count <= 2**a and (count == 2**a) == is_matching_graph(g)


def ke_shed_conditions(g: Graph) -> dict[str, bool]:
    """The six equivalent statements for Koenig-Egervary graphs, evaluated independently."""
    _require_ke(g)
    shed = shedding_mask(g)
    a = alpha_mask(g)
    omega = maximum_independent_masks(g)
    inside = [s for s in omega if s & ~shed == 0]
    return {
        "i": bool(inside),
        "ii": len(omega) == 2**a,
        "iii": shed == g.vertex_mask,
        "iv": len(inside) == len(omega),
        "v": any(not s1 & s2 for i, s1 in enumerate(inside) for s2 in inside[i:]),
        "vi": is_matching_graph(g),
    }


def ke_shed_equivalence_check(g: Graph) -> bool:
    return len(set(ke_shed_conditions(g).values())) == 1


# coronas and girth


def corona_k1_decomposition(g: Graph) -> dict[int, int] | None:
    """Split ``V`` into (support, pendant) pairs; returns ``{support: pendant}`` or ``None``.

    When it succeeds, ``G = H o K1`` with ``H`` induced by the supports.
    """
    partner: dict[int, int] = {}
    used = 0
    for p in range(g.n):
        if g.adj[p].bit_count() != 1 or used >> p & 1:
            continue
        s = g.adj[p].bit_length() - 1
        if used >> s & 1:
            return None
        partner[s] = p
        used |= 1 << s | 1 << p
    if used != g.vertex_mask:
        return None
    return dict(sorted(partner.items()))


def _is_c7(g: Graph) -> bool:
    return g.n == 7 and g.m == 7 and all(d == 2 for d in g.degrees()) and is_connected(g)


def girth_corollary_check(g: Graph) -> bool:
    """For the large-girth well-covered classes: disjoint maximum pair iff bipartite,
    and the graph is a corona ``H o K1``.
    """
    if not is_connected(g) or g.n == 0:
        raise PreconditionError("graph must be connected")
    gi = girth(g)
    wc_case = gi >= 6 and g.n != 1 and not _is_c7(g) and is_well_covered(g)
    vwc_case = gi >= 5 and is_very_well_covered(g)
    if not (wc_case or vwc_case):
        raise PreconditionError("needs well-covered with girth >= 6 (not K1, C7) or very well-covered with girth >= 5")
    return has_two_disjoint_mis(g).verdict == is_bipartite(g) and corona_k1_decomposition(g) is not None


# edge-alpha-critical graphs and the conjecture search


def edge_alpha_critical(g: Graph, cap: int = DEFAULT_CAP) -> bool:
    check_cap(g, cap)
    a = alpha_mask(g)
    return all(alpha_mask(delete_edges(g, [e])) > a for e in g.edges())


@dataclass
class SearchReport:
    family: str
    examined: int = 0
    critical: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    exploratory: list[dict] = field(default_factory=list)
    runtime_seconds: float = 0.0

    def to_json(self, with_runtime: bool = True) -> dict:
        out = {
            "family": self.family,
            "examined": self.examined,
            "edge_alpha_critical_without_isolated": self.critical,
            "counterexamples": self.counterexamples,
            "exploratory_non_ke_full_omega": {
                "note": "non-normative: non-KE graphs with |Omega| = 2^alpha seen during the search",
                "graphs": self.exploratory,
            },
        }
        if with_runtime:
            out["runtime_seconds"] = round(self.runtime_seconds, 3)
        return out


def odd_cycle_family(nmax: int) -> Iterator[Graph]:
    for n in range(5, nmax + 1, 2):
        c = cycle(n)
        yield c
        yield complement(c).with_label(f"co-C{n}")


def family_stream(
    family: str,
    nmax: int = 7,
    n: int = 9,
    p: float = 0.5,
    seed: int = 0,
    catalog: str | None = None,
) -> Iterator[Graph]:
    rng = random.Random(seed)
    if family == "catalog":
        yield from (read_catalog_file(catalog) if catalog else load_catalog(nmax))
    elif family == "random":
        while True:
            yield random_graph(n, p, rng)
    elif family == "trees":
        for k in range(1, nmax + 1):
            yield from all_labeled_trees(k)
    elif family == "unicyclic":
        while True:
            yield random_unicyclic(n, rng)
    elif family == "odd-cycles":
        yield from odd_cycle_family(nmax)
    else:
        raise ValueError(f"unknown family {family!r}")


EXPLORATORY_LIMIT = 25


def examine_for_conjecture(g: Graph) -> tuple[bool, dict | None, bool]:
    """(is a candidate, counterexample record or None, non-KE with |Omega| = 2^alpha)."""
    a = alpha_mask(g)
    omega_full = False
    if any(nb == 0 for nb in g.adj) or not edge_alpha_critical(g):
        candidate = False
        record = None
    else:
        candidate = True
        cert = has_two_disjoint_mis(g)
        record = None if cert.verdict else {"graph6": to_graph6(g), "n": g.n, "m": g.m, "alpha": a}
    if len(maximum_independent_masks(g)) == 2**a and a + matching_number(g) != g.n:
        omega_full = True
    return candidate, record, omega_full


def conjecture_search(
    family_graphs: Iterable[Graph], budget: int, family: str = "custom", workers: int = 1
) -> SearchReport:
    """Check every edge-alpha-critical graph without isolated vertices for a disjoint maximum pair.

    With ``workers > 1`` graphs are examined in a process pool; results are
    consumed in stream order, so the report does not depend on the worker count.
    """
    report = SearchReport(family)
    start = time.perf_counter()
    graphs = list(itertools.islice(family_graphs, budget))
    if workers > 1 and len(graphs) > 1:
        import multiprocessing

        with multiprocessing.get_context("spawn").Pool(workers) as pool:
            results = pool.map(examine_for_conjecture, graphs, chunksize=64)
    else:
        results = map(examine_for_conjecture, graphs)
    for g, (candidate, record, omega_full) in zip(graphs, results):
        report.examined += 1
        report.critical += candidate
        if record is not None:
            report.counterexamples.append(record)
        if omega_full and len(report.exploratory) < EXPLORATORY_LIMIT:
            report.exploratory.append({"graph6": to_graph6(g), "alpha": alpha_mask(g)})
    report.runtime_seconds = time.perf_counter() - start
    return report


# strategy dispatch


def decide(g: Graph, strategy: str = "auto", cap: int = DEFAULT_CAP, omega_cap: int | None = None) -> Certificate:
    """Two-disjoint-maximum-independent-sets decision with fast paths.

    ``auto`` tries the unicyclic procedure, then the Koenig-Egervary test
    (bipartite with a perfect matching), then enumeration.
    """
    if strategy == "unicyclic":
        if unique_cycle(g) is None:
            raise StrategyMismatch("unicyclic strategy needs a connected graph with exactly one cycle")
        return unicyclic_two_disjoint_mis(g)
    if strategy in ("omega-pairs", "condition-ii"):
        return has_two_disjoint_mis(g, strategy=strategy, cap=cap, omega_cap=omega_cap)
    if strategy != "auto":
        raise ValueError(f"unknown strategy {strategy!r}")
    if unique_cycle(g) is not None:
        return unicyclic_two_disjoint_mis(g)
    check_cap(g, cap)
    a = alpha_mask(g)
    mu = matching_number(g)
    if a + mu == g.n:
        sides = bipartition_mask(g)
        if sides is not None and 2 * mu == g.n:
            m = max_matching_bipartite(g)
            pair = [list(members(sides[0])), list(members(sides[1]))]
            return Certificate(
                True, "alpha-matching-bipartite", {"alpha": a, "matching": m.to_json(), "sides": pair, "pair": pair}
            )
        reason = "bipartite without a perfect matching" if sides is not None else "non-bipartite Koenig-Egervary graph"
        return Certificate(False, "konig-egervary", {"alpha": a, "mu": mu, "reason": reason})
    return has_two_disjoint_mis(g, cap=cap, omega_cap=omega_cap)


def validate_unicyclic_certificate(g: Graph, cert: Certificate) -> bool:
    """Polynomial re-check of a certificate for a unicyclic graph.

    Alpha comes from the branch-on-one-cycle-vertex formula and the matching
    side from the blossom algorithm, so no enumeration happens at any size.
    """
    cyc = _require_unicyclic(g)
    p = cert.payload
    a = unicyclic_alpha(g, cyc)
    mu = matching_number(g)
    if p.get("alpha", a) != a:
        return False
    try:
        if cert.verdict:
            s1, s2 = g.mask(p["pair"][0]), g.mask(p["pair"][1])
            independent = all(not g.adj[v] & s for s in (s1, s2) for v in iter_bits(s))
            return not s1 & s2 and independent and s1.bit_count() == s2.bit_count() == a
        if cert.kind == "konig-egervary":
            return a + mu == g.n and not (is_bipartite(g) and 2 * mu == g.n)
        if cert.kind == "unicyclic-cycle-vertex":
            if a + mu == g.n or is_bipartite(g):
                return False
            full = g.vertex_mask
            return all(2 * matching_number(g, full & ~(1 << v)) < g.n - 1 for v in cyc)
    except (KeyError, TypeError, IndexError, ValueError):
        return False
    return False


__all__ = [
    "SearchReport",
    "UnicyclicDecomposition",
    "conjecture_search",
    "corona_k1_decomposition",
    "decide",
    "edge_alpha_critical",
    "family_stream",
    "forest_alpha",
    "girth_corollary_check",
    "is_matching_graph",
    "ke_omega_bound_check",
    "ke_shed_conditions",
    "ke_shed_equivalence_check",
    "ke_two_disjoint_check",
    "literal_unicyclic_verdict",
    "odd_cycle_family",
    "spider",
    "tree_shed_bounds_check",
    "tree_shed_structure_check",
    "unicyclic_alpha",
    "unicyclic_alpha_mu_range_check",
    "unicyclic_core_union_check",
    "unicyclic_decompose",
    "unicyclic_pair_cycle_count_check",
    "unicyclic_subtree_projection_check",
    "unicyclic_two_disjoint_mis",
    "validate_unicyclic_certificate",
]
