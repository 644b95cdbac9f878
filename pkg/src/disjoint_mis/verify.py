"""Property suites: every theorem and invariant replayed over catalogs and seeded samples.

A suite is a list of tasks.  Each task is a plain tuple naming a module-level
function and its arguments, so tasks can be farmed out to worker processes;
results are merged in task order, which keeps the summary identical for a
fixed seed whatever the worker count.
"""

from __future__ import annotations

import math
import os
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from . import oracles
from ._bits import iter_bits, members
from .catalog import catalog_graph6, prufer_tree, random_bipartite, random_graph, random_tree, random_unicyclic
from .families import (
    corona_k1_decomposition,
    edge_alpha_critical,
    examine_for_conjecture,
    girth_corollary_check,
    ke_omega_bound_check,
    ke_shed_conditions,
    ke_two_disjoint_check,
    literal_unicyclic_verdict,
    odd_cycle_family,
    spider,
    tree_shed_bounds_check,
    tree_shed_structure_check,
    unicyclic_alpha_mu_range_check,
    unicyclic_core_union_check,
    unicyclic_pair_cycle_count_check,
    unicyclic_subtree_projection_check,
    unicyclic_two_disjoint_mis,
    validate_unicyclic_certificate,
)
from .graph import (
    Graph,
    complete,
    complete_bipartite,
    corona,
    corona_uniform,
    cycle,
    friendship,
    girth,
    is_bipartite,
    is_connected,
    parse_graph6,
    path,
    to_graph6,
)
from .independence import (
    alpha_mask,
    berge_verify,
    contains_induced_corona_odd_cycle,
    enumerate_maximal_independent_sets,
    equivalence_suite,
    has_two_disjoint_maximal_is,
    has_two_disjoint_mis,
    is_independent_mask,
    is_konig_egervary,
    is_very_well_covered,
    is_well_covered,
    maximum_independent_masks,
    mu_ge_alpha_check,
    omega_family,
    validate_certificate,
)
from .matching import (
    forest_perfect_matching,
    has_perfect_matching,
    match_into,
    matching_number,
    max_matching_bipartite,
    max_matching_general,
)
from .vertex_classes import (
    codominated_vertices,
    disjoint_maximal_from_shedding,
    expand_shedding_subset,
    shedding_mask,
    shedding_powerset_witnesses,
    simplicial_vertices,
)

MAX_STORED_FAILURES = 50
CHUNK = 400


class Tally:
    def __init__(self) -> None:
        self.checks: Counter[str] = Counter()
        self.failures: list[dict] = []
        self.failure_count = 0
        self.facts: dict[str, object] = {}

    def check(self, prop: str, ok: bool, g: Graph | None = None, detail: object = None) -> bool:
        self.checks[prop] += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_STORED_FAILURES:
                rec = {"property": prop}
                if g is not None:
                    rec["graph6"] = to_graph6(g)
                if detail is not None:
                    rec["detail"] = detail
                self.failures.append(rec)
        return ok

    def count(self, fact: str, by: int = 1) -> None:
        self.facts[fact] = self.facts.get(fact, 0) + by

    def merge(self, other: Tally) -> None:
        self.checks.update(other.checks)
        self.failure_count += other.failure_count
        room = MAX_STORED_FAILURES - len(self.failures)
        self.failures.extend(other.failures[:max(room, 0)])
        for k, v in other.facts.items():
            if isinstance(v, int) and not isinstance(v, bool) and isinstance(self.facts.get(k), int):
                self.facts[k] += v
            else:
                self.facts[k] = v


@dataclass
class SuiteResult:
    name: str
    params: dict
    checks: dict[str, int]
    failure_count: int
    failures: list[dict]
    facts: dict[str, object]
    seconds: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "params": self.params,
            "checks": dict(sorted(self.checks.items())),
            "failure_count": self.failure_count,
            "failures": self.failures,
            "facts": dict(sorted(self.facts.items())),
        }


def _rng(seed: int, *parts: object) -> random.Random:
    return random.Random(":".join(map(str, (seed,) + parts)))


def _chunks(items: list, size: int = CHUNK) -> list[list]:
    return [items[i:i + size] for i in range(0, len(items), size)]


def _sample_chunks(samples: int, size: int = CHUNK) -> list[tuple[int, int]]:
    return [(i, min(size, samples - i * size)) for i in range((samples + size - 1) // size)]


# oracle equivalence


def task_oracle_graphs(lines: list[str]) -> Tally:
    t = Tally()
    for line in lines:
        _oracle_one(t, parse_graph6(line))
    return t


def task_oracle_random(seed: int, chunk: int, count: int, n: int) -> Tally:
    t = Tally()
    rng = _rng(seed, "oracle", chunk)
    for _ in range(count):
        _oracle_one(t, random_graph(n, 0.5, rng))
    return t


def _oracle_one(t: Tally, g: Graph) -> None:
    fam = omega_family(g)
    ref = oracles.omega(g)
    t.check("alpha", fam.alpha == oracles.alpha(g), g)
    t.check("omega", sorted(fam.masks()) == ref, g)
    t.check("core", sum(1 << v for v in fam.core) == oracles.core(g), g)
    maximal = [sum(1 << v for v in s) for s in enumerate_maximal_independent_sets(g)]
    t.check("maximal_sets", sorted(maximal) == oracles.maximal_masks(g), g)


# matching


def task_matching_random(seed: int, chunk: int, count: int, nmax: int) -> Tally:
    t = Tally()
    rng = _rng(seed, "matching", chunk)
    for i in range(count):
        n = rng.randint(1, nmax)
        g = random_graph(n, rng.uniform(0.1, 0.9), rng)
        mu = matching_number(g)
        t.check("general_vs_brute_force", mu == oracles.matching_number(g), g)
        if i % 10 == 0:
            m = max_matching_general(g)
            t.check("canonical_matching_valid", m.is_matching_of(g) and m.size == mu, g)
    return t


def task_matching_structured(seed: int, chunk: int, count: int) -> Tally:
    t = Tally()
    rng = _rng(seed, "matching-structured", chunk)
    for _ in range(count):
        p_side, q_side = rng.randint(1, 5), rng.randint(1, 5)
        g = random_bipartite(p_side, q_side, rng.uniform(0.2, 0.8), rng)
        hk = max_matching_bipartite(g)
        t.check("bipartite_agrees_with_general", hk.size == matching_number(g) == max_matching_general(g).size, g)
        t.check("konig_mu_equals_min_cover", hk.size == oracles.min_vertex_cover(g), g)
        left = list(range(p_side))
        right = list(range(p_side, p_side + q_side))
        t.check("match_into_iff_hall", (match_into(g, left, right) is not None) == oracles.hall_condition(g, left, right), g)

        n = rng.randint(1, 14)
        tree = random_tree(n, rng)
        kept = [e for e in tree.edges() if rng.random() < 0.8]
        forest = Graph.from_edges(n, kept)
        fm = forest_perfect_matching(forest)
        t.check("forest_vs_general", (fm is not None) == (2 * matching_number(forest) == n), forest)
        if fm is not None:
            t.check("forest_matching_valid", fm.is_matching_of(forest) and 2 * fm.size == n, forest)
    return t


# Berge


def task_berge(lines: list[str]) -> Tally:
    t = Tally()
    for line in lines:
        g = parse_graph6(line)
        a = alpha_mask(g)
        for s in oracles.independent_masks(g):
            t.check("berge", berge_verify(g, members(s)) == (s.bit_count() == a), g, list(members(s)))
    return t


# five equivalent conditions


def _five_one(t: Tally, g: Graph) -> None:
    rep = equivalence_suite(g)
    truth = oracles.two_disjoint_mis(g)
    t.check("five_conditions_agree", rep.consistent, g, rep.conditions)
    t.check("conditions_match_oracle", rep.conditions["i"] == truth, g)
    cert = has_two_disjoint_mis(g)
    t.check("decision_matches_oracle", cert.verdict == truth, g)
    t.check("certificate_validates", validate_certificate(g, cert), g)
    t.check("mu_ge_alpha_when_pair", mu_ge_alpha_check(g), g)
    t.count("yes" if truth else "no")


def task_five_graphs(lines: list[str]) -> Tally:
    t = Tally()
    for line in lines:
        _five_one(t, parse_graph6(line))
    return t


def task_five_random(seed: int, chunk: int, count: int, n: int) -> Tally:
    t = Tally()
    rng = _rng(seed, "five", chunk)
    for _ in range(count):
        _five_one(t, random_graph(n, 0.5, rng))
    return t


# shedding


def task_shedding(lines: list[str], max_s: int) -> Tally:
    t = Tally()
    for line in lines:
        g = parse_graph6(line)
        _shedding_one(t, g, max_s)
    return t


def _on_five_cycle_mask(g: Graph) -> int:
    return sum(1 << v for v in range(g.n) if oracles.on_five_cycle(g, v))


def _shedding_one(t: Tally, g: Graph, max_s: int) -> None:
    shed = shedding_mask(g)
    t.check("shedding_matches_definition", shed == oracles.shedding(g), g)
    codom = codominated_vertices(g)
    codom_mask = sum(1 << v for v in codom)
    t.check("codominated_subset_of_shedding", codom_mask & ~shed == 0, g)
    closed = g.closed_masks()
    if is_bipartite(g):
        t.check("bipartite_shedding_equals_codominated", codom_mask == shed, g)
        leaf_witness = all(
            g.adj[y].bit_count() == 1
            for x in range(g.n)
            for y in iter_bits(g.adj[x])
            if closed[y] & ~closed[x] == 0
        )
        t.check("bipartite_codominator_is_leaf", leaf_witness, g)
    rest = shed & ~codom_mask
    t.check("shedding_codominated_or_on_5_cycle", rest & ~_on_five_cycle_mask(g) == 0 if rest else True, g)
    simp = simplicial_vertices(g)
    t.check("simplicial_neighbors_shedding", all(g.adj[v] & ~shed == 0 for v in simp), g)

    sets = [s for s in oracles.independent_masks(g) if s & ~shed == 0]
    sizes = Counter(s.bit_count() for s in oracles.independent_masks(g))
    for s in sets:
        k = s.bit_count()
        t.check("shed_set_count_at_least_2^k", sizes[k] >= 2**k, g, list(members(s)))
        if k <= max_s:
            wit = shedding_powerset_witnesses(g, members(s), shed=members(shed))
            ok = (
                len(wit) == 2**k
                and len(set(wit)) == 2**k
                and all(len(w) == k and is_independent_mask(g, sum(1 << v for v in w)) for w in wit)
            )
            t.check("powerset_witnesses", ok, g, list(members(s)))
            if expand_shedding_subset(g, members(s), members(s), shed=members(shed)).backtracked:
                t.count("expansions_needing_backtracking")
            u, m = disjoint_maximal_from_shedding(g, members(s), shed=members(shed))
            um = sum(1 << v for v in u)
            maximal = all(um >> v & 1 or g.adj[v] & um for v in range(g.n))
            matched = m.size == k and all((x in members(s)) != (y in members(s)) for x, y in m.edges)
            matched = matched and all(um >> y & 1 for e in m.edges for y in e if not s >> y & 1)
            t.check("disjoint_maximal_from_shedding", is_independent_mask(g, um) and maximal and not um & s and len(u) >= k and matched, g, list(members(s)))
    omega = maximum_independent_masks(g)
    a = alpha_mask(g)
    if any(s & ~shed == 0 for s in omega):
        t.count("graphs_with_mis_inside_shed")
        t.check("mis_inside_shed_gives_2^alpha", len(omega) >= 2**a, g)
        t.check("mis_inside_shed_gives_pair", has_two_disjoint_mis(g).verdict, g)
        t.check("mis_inside_shed_mu_ge_alpha", matching_number(g) >= a, g)


def _named_shedding(t: Tally) -> None:
    t.check("shed_K1_empty", shedding_mask(complete(1)) == 0)
    for n in range(2, 7):
        g = complete(n)
        t.check("shed_Kn_all", shedding_mask(g) == g.vertex_mask, g)
    c5 = cycle(5)
    t.check("shed_C5_all", shedding_mask(c5) == c5.vertex_mask, c5)
    p4 = path(4)
    t.check("shed_P4_degree_two", shedding_mask(p4) == 0b0110, p4)
    for n in range(2, 5):
        g = complete_bipartite(n, n)
        t.check("KNN_pair_without_shedding", shedding_mask(g) == 0 and has_two_disjoint_mis(g).verdict, g)


def task_shedding_named() -> Tally:
    t = Tally()
    _named_shedding(t)
    return t


# trees


def task_trees(n: int, prefix: tuple[int, ...]) -> Tally:
    t = Tally()
    if n <= 2:
        trees = [prufer_tree((), n)]
    else:
        trees = (prufer_tree(prefix + rest, n) for rest in product(range(n), repeat=n - 2 - len(prefix)))
    for tree in trees:
        t.check("tree_shed_structure", tree_shed_structure_check(tree), tree)
        if not (tree.n == 2):
            t.check("tree_shed_bounds", tree_shed_bounds_check(tree), tree)
        t.count(f"labeled_trees_n{n}")
    return t


def task_tree_tightness() -> Tally:
    t = Tally()
    for n in range(2, 7):
        g = corona_uniform(path(n), complete(1))
        t.check("PnoK1_shed_equals_alpha", shedding_mask(g).bit_count() == alpha_mask(g), g)
    g = corona_uniform(path(3), complete(1))
    t.facts["P3oK1_shed_alpha"] = [shedding_mask(g).bit_count(), alpha_mask(g)]
    for p in range(2, 6):
        g = spider(p)
        t.check("spider_shed_equals_alpha_minus_1", shedding_mask(g).bit_count() == alpha_mask(g) - 1 == p, g)
    g = spider(3)
    t.facts["spider3_shed_alpha"] = [shedding_mask(g).bit_count(), alpha_mask(g)]
    k1, k2 = complete(1), complete(2)
    t.check("K1_shed_alpha_minus_1", shedding_mask(k1).bit_count() == 0 == alpha_mask(k1) - 1, k1)
    t.check("K2_shed_alpha_plus_1", shedding_mask(k2).bit_count() == 2 == alpha_mask(k2) + 1, k2)
    t.check("P4_no_maximal_inside_shed", tree_shed_structure_check(path(4)), path(4))
    return t


# unicyclic


UNICYCLIC_TIME_LIMIT = 0.010


def task_unicyclic(seed: int, chunk: int, count: int, nmax: int) -> Tally:
    t = Tally()
    rng = _rng(seed, "unicyclic", chunk)
    for _ in range(count):
        n = rng.randint(3, nmax)
        g = random_unicyclic(n, rng)
        cert = unicyclic_two_disjoint_mis(g)
        truth = has_two_disjoint_mis(g)
        t.check("theorem_matches_brute_force", cert.verdict == truth.verdict, g)
        t.check("certificate_validates", validate_certificate(g, cert), g)
        t.check("polynomial_validator_accepts", validate_unicyclic_certificate(g, cert), g)
        t.check("alpha_mu_range", unicyclic_alpha_mu_range_check(g), g)
        if literal_unicyclic_verdict(g) != truth.verdict:
            t.count("literal_reading_disagrees")
        if n == nmax:
            best = math.inf
            for _ in range(3):
                start = time.perf_counter()
                unicyclic_two_disjoint_mis(g)
                best = min(best, time.perf_counter() - start)
            t.check("theorem_path_within_10ms_at_nmax", best <= UNICYCLIC_TIME_LIMIT, g)
        if not is_konig_egervary(g):
            t.count("non_ke_instances")
            t.check("core_is_union_of_subtree_cores", unicyclic_core_union_check(g), g)
            t.check("subtree_projection", unicyclic_subtree_projection_check(g), g)
            t.check("pair_meets_cycle_in_half", unicyclic_pair_cycle_count_check(g), g)
    return t


def task_unicyclic_named() -> Tally:
    t = Tally()
    c4 = cycle(4)
    t.check("C4_yes_bipartite", unicyclic_two_disjoint_mis(c4).kind == "alpha-matching-bipartite" and unicyclic_two_disjoint_mis(c4).verdict, c4)
    c5 = cycle(5)
    t.check("C5_yes_cycle_vertex", unicyclic_two_disjoint_mis(c5).kind == "unicyclic-cycle-vertex" and unicyclic_two_disjoint_mis(c5).verdict, c5)
    for n in (5, 7, 9, 11):
        c = cycle(n)
        t.check("odd_cycle_core_empty", unicyclic_core_union_check(c), c)
    return t


# Koenig-Egervary


def task_ke(lines: list[str]) -> Tally:
    t = Tally()
    for line in lines:
        g = parse_graph6(line)
        no_isolated = all(g.adj)
        wc = is_well_covered(g)
        ke = is_konig_egervary(g)
        if no_isolated:
            t.check("very_well_covered_iff_wc_and_ke", is_very_well_covered(g) == (wc and ke), g)
        if not ke:
            continue
        t.count("ke_graphs")
        t.check("ke_pair_iff_bipartite_pm", ke_two_disjoint_check(g), g)
        t.check("ke_omega_at_most_2^alpha", ke_omega_bound_check(g), g)
        conds = ke_shed_conditions(g)
        t.check("ke_shed_six_conditions_agree", len(set(conds.values())) == 1, g, conds)
        if conds["vi"]:
            t.count("ke_equality_instances")
        if no_isolated and wc and has_two_disjoint_mis(g).verdict:
            t.check("vwc_pair_implies_bipartite_pm", is_bipartite(g) and has_perfect_matching(g) is not None, g)
        if is_bipartite(g) and is_connected(g):
            _core_pm(t, g)
    return t


def _core_pm(t: Tally, g: Graph) -> None:
    core = omega_family(g).core
    t.check("connected_bipartite_pm_iff_empty_core", (has_perfect_matching(g) is not None) == (len(core) == 0), g)


def task_core_random(seed: int, chunk: int, count: int) -> Tally:
    t = Tally()
    rng = _rng(seed, "core", chunk)
    done = 0
    while done < count:
        n = rng.randint(9, 10)
        p_side = rng.randint(1, n - 1)
        g = random_bipartite(p_side, n - p_side, rng.uniform(0.2, 0.7), rng)
        if not is_connected(g):
            continue
        _core_pm(t, g)
        done += 1
    return t


def task_friendship() -> Tally:
    t = Tally()
    sizes = {}
    for q in (2, 3, 4):
        g = friendship(q)
        count = len(maximum_independent_masks(g))
        sizes[str(q)] = count
        t.check("friendship_omega_2^q", count == 2**q == 2 ** alpha_mask(g), g)
        t.check("friendship_not_ke", not is_konig_egervary(g), g)
    t.facts["friendship_omega_sizes"] = sizes
    return t


# coronas


FIGURE_CORONAS = {
    "P2o{K1,K2}": (path(2), (complete(1), complete(2))),
    "P2oK2": (path(2), (complete(2), complete(2))),
    "P3o{K2,K1,K2}": (path(3), (complete(2), complete(1), complete(2))),
}


def task_corona(lines: list[str]) -> Tally:
    t = Tally()
    for line in lines:
        h = parse_graph6(line)
        g = corona_uniform(h, complete(1))
        t.check("HoK1_pair_iff_H_bipartite", has_two_disjoint_mis(g).verdict == is_bipartite(h), g)
        t.check("HoK1_recognised", corona_k1_decomposition(g) is not None, g)
        t.check("HoK1_very_well_covered", is_very_well_covered(g), g)
        if is_connected(g) and girth(g) >= 5:
            t.check("girth_corollary", girth_corollary_check(g), g)
        if h.n <= 4:
            g2 = corona_uniform(h, complete(2))
            t.check("GoK2_all_shedding", shedding_mask(g2) == g2.vertex_mask, g2)
            t.check("GoK2_pair", has_two_disjoint_mis(g2).verdict, g2)
    return t


def task_corona_named() -> Tally:
    t = Tally()
    for name, (base, fam) in FIGURE_CORONAS.items():
        g = corona(base, list(fam))
        shed = shedding_mask(g)
        inside = any(s & ~shed == 0 for s in maximum_independent_masks(g))
        t.check("figure_corona_mis_inside_shed", inside, g, name)
        t.check("figure_corona_pair", has_two_disjoint_mis(g).verdict, g, name)
    for h, expect in ((path(2), True), (path(3), True), (cycle(5), False), (cycle(7), False)):
        g = corona_uniform(h, complete(1))
        t.check("girth_corollary_named", girth_corollary_check(g) and has_two_disjoint_mis(g).verdict == expect, g)
    return t


# Schaudt


def task_schaudt(lines: list[str]) -> Tally:
    t = Tally()
    for line in lines:
        _schaudt_one(t, parse_graph6(line))
    return t


def _schaudt_one(t: Tally, g: Graph) -> None:
    if not all(g.adj) or not is_well_covered(g):
        return
    t.count("well_covered_without_isolated")
    emb = contains_induced_corona_odd_cycle(g, k_max=3)
    if emb is None:
        t.check("no_odd_corona_implies_pair", has_two_disjoint_mis(g).verdict, g)
    else:
        t.count("with_induced_odd_corona")


def task_schaudt_coronas(lines: list[str]) -> Tally:
    t = Tally()
    for line in lines:
        h = parse_graph6(line)
        _schaudt_one(t, corona_uniform(h, complete(1)))
        if h.n <= 4:
            _schaudt_one(t, corona_uniform(h, complete(2)))
            fam = [complete(1 + (v % 2)) for v in range(h.n)]
            _schaudt_one(t, corona(h, fam))
    return t


# conjecture


def task_conjecture(lines: list[str]) -> Tally:
    t = Tally()
    for line in lines:
        g = parse_graph6(line)
        candidate, record, omega_full = examine_for_conjecture(g)
        if candidate:
            t.count("edge_alpha_critical_without_isolated")
            t.check("critical_has_pair", record is None, g)
        if omega_full:
            t.count("exploratory_non_ke_full_omega")
    return t


def task_conjecture_odd_cycles(nmax: int) -> Tally:
    t = Tally()
    critical_complements = []
    for g in odd_cycle_family(nmax):
        if g.label.startswith("co-"):
            # only the 5-cycle is self-complementary; longer complements lose criticality
            if edge_alpha_critical(g):
                critical_complements.append(g.label)
        else:
            t.check("odd_cycle_critical", edge_alpha_critical(g), g, g.label)
        t.check("odd_cycle_family_pair", has_two_disjoint_mis(g).verdict, g, g.label)
    t.facts["critical_odd_cycle_complements"] = critical_complements
    return t


# named facts


def task_named() -> Tally:
    t = Tally()
    c5k1 = corona_uniform(cycle(5), complete(1))
    t.check("C5oK1_no_disjoint_maximal_pair", has_two_disjoint_maximal_is(c5k1) is None, c5k1)
    t.check("C5oK1_very_well_covered", is_very_well_covered(c5k1), c5k1)
    t.check("P3_disjoint_maximal_pair", has_two_disjoint_maximal_is(path(3)) == ((0, 2), (1,)), path(3))
    wc = [n for n in range(3, 13) if is_well_covered(cycle(n))]
    vwc = [n for n in range(3, 13) if is_very_well_covered(cycle(n))]
    t.facts["well_covered_cycles"] = wc
    t.facts["very_well_covered_cycles"] = vwc
    t.check("well_covered_cycles_are_3_4_5_7", wc == [3, 4, 5, 7])
    t.check("only_C4_very_well_covered", vwc == [4])
    t.check("C4_pair", has_two_disjoint_mis(cycle(4)).verdict, cycle(4))
    c5 = cycle(5)
    t.check("C5_well_covered_non_bipartite_with_pair", is_well_covered(c5) and not is_bipartite(c5) and has_two_disjoint_mis(c5).verdict, c5)
    c7 = cycle(7)
    t.check("C7_well_covered_with_pair", is_well_covered(c7) and has_two_disjoint_mis(c7).verdict, c7)
    c6 = cycle(6)
    t.check("C6_bipartite_pm_not_very_well_covered", has_two_disjoint_mis(c6).verdict and not is_very_well_covered(c6), c6)
    return t


# registry


SUITES = (
    "oracle",
    "matching",
    "berge",
    "five-equivalences",
    "shedding",
    "trees",
    "unicyclic",
    "ke",
    "corona",
    "schaudt",
    "conjecture",
    "named",
)

DEFAULTS: dict[str, dict] = {
    "oracle": {"nmax": 7, "samples": 10_000, "n_random": 8},
    "matching": {"nmax": 10, "samples": 10_000, "structured": 1_000},
    "berge": {"nmax": 7},
    "five-equivalences": {"nmax": 7, "samples": 10_000, "n_random": 8},
    "shedding": {"nmax": 7, "max_s": 5},
    "trees": {"nmax": 8},
    "unicyclic": {"nmax": 12, "samples": 10_000},
    "ke": {"nmax": 8, "core_samples": 500},
    "corona": {"nmax": 5},
    "schaudt": {"nmax": 8, "corona_nmax": 6},
    "conjecture": {"nmax": 7, "odd_cycle_nmax": 11},
    "named": {},
}


def _tasks(name: str, p: dict, seed: int) -> list[tuple]:
    if name == "oracle":
        return [(task_oracle_graphs, c) for c in _chunks(catalog_graph6(p["nmax"]))] + [
            (task_oracle_random, seed, i, k, p["n_random"]) for i, k in _sample_chunks(p["samples"])
        ]
    if name == "matching":
        return [(task_matching_random, seed, i, k, p["nmax"]) for i, k in _sample_chunks(p["samples"])] + [
            (task_matching_structured, seed, i, k) for i, k in _sample_chunks(p["structured"])
        ]
    if name == "berge":
        return [(task_berge, c) for c in _chunks(catalog_graph6(p["nmax"]), 100)]
    if name == "five-equivalences":
        return [(task_five_graphs, c) for c in _chunks(catalog_graph6(p["nmax"]))] + [
            (task_five_random, seed, i, k, p["n_random"]) for i, k in _sample_chunks(p["samples"])
        ]
    if name == "shedding":
        return [(task_shedding_named,)] + [(task_shedding, c, p["max_s"]) for c in _chunks(catalog_graph6(p["nmax"]), 50)]
    if name == "trees":
        tasks: list[tuple] = [(task_tree_tightness,)]
        for n in range(1, p["nmax"] + 1):
            if n <= 4:
                tasks.append((task_trees, n, ()))
            else:
                tasks.extend((task_trees, n, pre) for pre in product(range(n), repeat=min(2, n - 2)))
        return tasks
    if name == "unicyclic":
        return [(task_unicyclic_named,)] + [
            (task_unicyclic, seed, i, k, p["nmax"]) for i, k in _sample_chunks(p["samples"], 250)
        ]
    if name == "ke":
        return [(task_friendship,)] + [(task_ke, c) for c in _chunks(catalog_graph6(p["nmax"]))] + [
            (task_core_random, seed, i, k) for i, k in _sample_chunks(p["core_samples"], 100)
        ]
    if name == "corona":
        return [(task_corona_named,), (task_corona, catalog_graph6(p["nmax"]))]
    if name == "schaudt":
        return [(task_schaudt, c) for c in _chunks(catalog_graph6(p["nmax"]))] + [
            (task_schaudt_coronas, c) for c in _chunks(catalog_graph6(p["corona_nmax"]), 50)
        ]
    if name == "conjecture":
        return [(task_conjecture_odd_cycles, p["odd_cycle_nmax"])] + [
            (task_conjecture, c) for c in _chunks(catalog_graph6(p["nmax"]))
        ]
    if name == "named":
        return [(task_named,)]
    raise ValueError(f"unknown suite {name!r}")


def _run_task(task: tuple) -> Tally:
    fn, *args = task
    return fn(*args)


def run_suite(name: str, seed: int = 0, workers: int = 1, pool=None, **overrides) -> SuiteResult:
    if name not in DEFAULTS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    params = dict(DEFAULTS[name])
    for k, v in overrides.items():
        if v is not None and k in params:
            params[k] = v
    tasks = _tasks(name, params, seed)
    start = time.perf_counter()
    total = Tally()
    if pool is not None:
        results = pool.imap(_run_task, tasks)
    else:
        results = map(_run_task, tasks)
    for part in results:
        total.merge(part)
    return SuiteResult(
        name, params, dict(total.checks), total.failure_count, total.failures, total.facts, time.perf_counter() - start
    )


def run_suites(names: list[str], seed: int = 0, workers: int | None = None, **overrides) -> list[SuiteResult]:
    workers = workers or os.cpu_count() or 1
    if workers <= 1:
        return [run_suite(n, seed, **overrides) for n in names]
    import multiprocessing

    with multiprocessing.get_context("spawn").Pool(workers) as pool:
        return [run_suite(n, seed, pool=pool, **overrides) for n in names]


def summary(results: list[SuiteResult], seed: int) -> dict:
    return {
        "seed": seed,
        "passed": all(r.passed for r in results),
        "suites": {r.name: r.to_json() for r in results},
    }
