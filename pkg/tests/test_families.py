import random

import pytest
from hypothesis import given, settings

from disjoint_mis import oracles
from disjoint_mis.catalog import all_labeled_trees, load_catalog, random_unicyclic
from disjoint_mis.errors import PreconditionError, StrategyMismatch
from disjoint_mis.families import (
    conjecture_search,
    corona_k1_decomposition,
    decide,
    edge_alpha_critical,
    family_stream,
    forest_alpha,
    girth_corollary_check,
    is_matching_graph,
    ke_omega_bound_check,
    ke_shed_conditions,
    ke_shed_equivalence_check,
    ke_two_disjoint_check,
    literal_unicyclic_verdict,
    odd_cycle_family,
    spider,
    tree_shed_bounds_check,
    tree_shed_structure_check,
    unicyclic_alpha,
    unicyclic_alpha_mu_range_check,
    unicyclic_core_union_check,
    unicyclic_decompose,
    unicyclic_pair_cycle_count_check,
    unicyclic_subtree_projection_check,
    unicyclic_two_disjoint_mis,
    validate_unicyclic_certificate,
)
from disjoint_mis.graph import (
    Graph,
    complement,
    complete,
    complete_bipartite,
    copies,
    corona,
    corona_uniform,
    cycle,
    friendship,
    path,
    star,
)
from disjoint_mis.independence import Certificate, has_two_disjoint_mis, validate_certificate
from disjoint_mis.vertex_classes import shedding_vertices

from .strategies import unicyclic_graphs

TRIANGLE_PENDANT = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
TRIANGLE_TAIL = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)])
C5_TAIL = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6)])


def test_decompose_examples():
    d = unicyclic_decompose(cycle(5))
    assert d.cycle == [0, 1, 2, 3, 4] and d.attachments == () and d.subtrees == {}
    d = unicyclic_decompose(TRIANGLE_PENDANT)
    assert d.attachments == (3,) and d.subtrees[3][0] == complete(1)
    d = unicyclic_decompose(C5_TAIL)
    t, ids = d.subtrees[5]
    assert t == path(2) and ids == (5, 6)
    with pytest.raises(PreconditionError):
        unicyclic_decompose(path(4))


def test_forest_alpha():
    assert forest_alpha(path(5), path(5).vertex_mask) == 3
    with pytest.raises(PreconditionError):
        forest_alpha(cycle(4), cycle(4).vertex_mask)


@given(unicyclic_graphs())
def test_unicyclic_alpha_matches_oracle(g):
    assert unicyclic_alpha(g) == oracles.alpha(g)


def test_unicyclic_decision_examples():
    c4 = unicyclic_two_disjoint_mis(cycle(4))
    assert c4.verdict and c4.kind == "alpha-matching-bipartite"
    c5 = unicyclic_two_disjoint_mis(cycle(5))
    assert c5.verdict and c5.kind == "unicyclic-cycle-vertex"
    tp = unicyclic_two_disjoint_mis(TRIANGLE_PENDANT)
    assert tp.verdict == oracles.two_disjoint_mis(TRIANGLE_PENDANT)


# Koenig-Egervary unicyclic graphs where a cycle vertex leaves a forest with a
# perfect matching, yet no disjoint maximum pair exists
KE_TRAPS = [
    Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
    Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)]),
]


@pytest.mark.parametrize("g", KE_TRAPS)
def test_cycle_vertex_criterion_alone_is_not_enough(g):
    assert literal_unicyclic_verdict(g)
    assert not oracles.two_disjoint_mis(g)
    cert = unicyclic_two_disjoint_mis(g)
    assert not cert.verdict and cert.kind == "konig-egervary"


@settings(max_examples=300)
@given(unicyclic_graphs())
def test_unicyclic_decision_matches_brute_force(g):
    cert = unicyclic_two_disjoint_mis(g)
    assert cert.verdict == oracles.two_disjoint_mis(g)
    assert validate_certificate(g, cert)
    assert validate_unicyclic_certificate(g, cert)
    assert unicyclic_alpha_mu_range_check(g)


def test_unicyclic_validator_rejects_forgeries():
    g = cycle(5)
    assert not validate_unicyclic_certificate(g, Certificate(True, "unicyclic-cycle-vertex", {"pair": [[0, 1], [2, 3]]}))
    assert not validate_unicyclic_certificate(g, Certificate(False, "konig-egervary", {}))
    assert not validate_unicyclic_certificate(g, Certificate(False, "unicyclic-cycle-vertex", {}))


def test_large_unicyclic_without_enumeration():
    g = random_unicyclic(60, random.Random(7))
    cert = decide(g, "unicyclic")
    assert validate_unicyclic_certificate(g, cert)


def test_unicyclic_structure_examples():
    assert unicyclic_core_union_check(cycle(5))
    assert unicyclic_core_union_check(cycle(7))
    assert unicyclic_core_union_check(TRIANGLE_TAIL)
    assert unicyclic_subtree_projection_check(TRIANGLE_TAIL)
    with pytest.raises(PreconditionError):
        unicyclic_core_union_check(cycle(6))


def test_alpha_mu_range_examples():
    assert unicyclic_alpha_mu_range_check(cycle(6))
    assert unicyclic_alpha_mu_range_check(cycle(5))


@settings(max_examples=200)
@given(unicyclic_graphs(max_n=11))
def test_non_ke_unicyclic_structure(g):
    if oracles.alpha(g) + oracles.matching_number(g) == g.n:
        return
    assert unicyclic_core_union_check(g)
    assert unicyclic_subtree_projection_check(g)
    assert unicyclic_pair_cycle_count_check(g)


def test_tree_examples():
    k2 = complete(2)
    assert tree_shed_structure_check(k2)
    assert len(shedding_vertices(k2)) == 2
    assert tree_shed_structure_check(path(4))
    assert tree_shed_structure_check(spider(3)) and tree_shed_bounds_check(spider(3))
    assert len(shedding_vertices(spider(3))) == 3 == oracles.alpha(spider(3)) - 1
    assert len(shedding_vertices(spider(2))) == 2 == oracles.alpha(spider(2)) - 1
    p3k1 = corona_uniform(path(3), complete(1))
    assert len(shedding_vertices(p3k1)) == 3 == oracles.alpha(p3k1)
    assert tree_shed_bounds_check(complete(1))
    with pytest.raises(PreconditionError):
        tree_shed_bounds_check(k2)
    with pytest.raises(PreconditionError):
        tree_shed_structure_check(cycle(3))


@pytest.mark.parametrize("n", range(1, 7))
def test_all_small_trees(n):
    for t in all_labeled_trees(n):
        assert tree_shed_structure_check(t)
        if t.n != 2:
            assert tree_shed_bounds_check(t)


def test_ke_examples():
    assert ke_two_disjoint_check(cycle(6)) and has_two_disjoint_mis(cycle(6)).verdict
    assert ke_two_disjoint_check(path(3)) and not has_two_disjoint_mis(path(3)).verdict
    h = corona_uniform(path(3), complete(1))
    assert has_two_disjoint_mis(h).verdict
    with pytest.raises(PreconditionError):
        ke_two_disjoint_check(cycle(5))


def test_ke_omega_examples():
    m3 = copies(complete(2), 3)
    assert is_matching_graph(m3) and ke_omega_bound_check(m3)
    assert len(oracles.omega(m3)) == 8
    assert len(oracles.omega(cycle(6))) == 2 and ke_omega_bound_check(cycle(6))
    assert len(oracles.omega(path(4))) == 3 and ke_omega_bound_check(path(4))
    assert not is_matching_graph(path(4))


def test_ke_shed_examples():
    assert set(ke_shed_conditions(copies(complete(2), 2)).values()) == {True}
    assert set(ke_shed_conditions(path(4)).values()) == {False}
    assert set(ke_shed_conditions(complete_bipartite(3, 3)).values()) == {False}


def test_ke_catalog_small():
    for g in load_catalog(6):
        if oracles.alpha(g) + oracles.matching_number(g) == g.n:
            assert ke_two_disjoint_check(g)
            assert ke_omega_bound_check(g)
            assert ke_shed_equivalence_check(g)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_friendship_is_full_but_not_ke(q):
    g = friendship(q)
    assert len(oracles.omega(g)) == 2**q
    assert oracles.alpha(g) + oracles.matching_number(g) != g.n


def test_corona_recognition():
    assert corona_k1_decomposition(corona_uniform(cycle(5), complete(1))) == {i: i + 5 for i in range(5)}
    assert corona_k1_decomposition(path(4)) == {1: 0, 2: 3}
    assert corona_k1_decomposition(cycle(4)) is None
    assert corona_k1_decomposition(star(3)) is None


def test_girth_corollary_examples():
    assert girth_corollary_check(corona_uniform(path(2), complete(1)))
    c5k1 = corona_uniform(cycle(5), complete(1))
    assert girth_corollary_check(c5k1) and not has_two_disjoint_mis(c5k1).verdict
    c7k1 = corona_uniform(cycle(7), complete(1))
    assert girth_corollary_check(c7k1)
    assert not has_two_disjoint_mis(c7k1, strategy="condition-ii").verdict
    with pytest.raises(PreconditionError):
        girth_corollary_check(cycle(6))


@pytest.mark.parametrize("h", [path(2), path(3), cycle(3), cycle(4), star(3)])
def test_corona_k1_pair_iff_bipartite(h):
    from disjoint_mis.graph import is_bipartite

    assert has_two_disjoint_mis(corona_uniform(h, complete(1))).verdict == is_bipartite(h)


def test_corona_k2_everything_sheds():
    g = corona(path(3), [complete(2)] * 3)
    assert shedding_vertices(g) == tuple(range(g.n))
    assert has_two_disjoint_mis(g).verdict


def test_edge_alpha_critical_examples():
    assert edge_alpha_critical(cycle(5))
    assert edge_alpha_critical(cycle(9))
    assert not edge_alpha_critical(cycle(4))
    assert edge_alpha_critical(complete(4))


def test_odd_cycle_complements_beyond_five_are_not_critical():
    # dropping the edge {0, 3} of the complement of C_7 adds a chord of C_7
    # spanning three steps, which creates no triangle, so alpha stays 2
    co7 = complement(cycle(7))
    assert not edge_alpha_critical(co7)
    assert oracles.alpha(Graph.from_edges(7, [e for e in co7.edges() if e != (0, 3)])) == 2
    assert edge_alpha_critical(complement(cycle(5)))
    for g in odd_cycle_family(11):
        assert has_two_disjoint_mis(g).verdict


def test_conjecture_search_examples():
    report = conjecture_search(load_catalog(6), 10_000, "catalog")
    assert report.examined == 208 and report.counterexamples == []
    assert conjecture_search(odd_cycle_family(11), 100, "odd-cycles").counterexamples == []
    empty = conjecture_search(load_catalog(6), 0, "catalog")
    assert empty.examined == 0 and empty.critical == 0
    assert "runtime_seconds" not in empty.to_json(with_runtime=False)


def test_conjecture_search_reports_counterexamples(monkeypatch):
    import disjoint_mis.families as fam

    monkeypatch.setattr(fam, "has_two_disjoint_mis", lambda g: Certificate(False, "exhaustion", {}))
    report = conjecture_search([cycle(5)], 10)
    assert report.counterexamples == [{"graph6": "Dhc", "n": 5, "m": 5, "alpha": 2}]


def test_conjecture_search_parallel_matches_serial():
    graphs = list(load_catalog(5))
    serial = conjecture_search(graphs, 1000, "catalog")
    parallel = conjecture_search(graphs, 1000, "catalog", workers=2)
    assert serial.to_json(False) == parallel.to_json(False)


def test_family_streams():
    assert sum(1 for _ in family_stream("trees", nmax=5)) == 1 + 1 + 3 + 16 + 125
    first = [g for _, g in zip(range(3), family_stream("random", n=9, seed=1))]
    again = [g for _, g in zip(range(3), family_stream("random", n=9, seed=1))]
    assert first == again
    assert all(g.n == 9 for g in first)
    with pytest.raises(ValueError):
        next(family_stream("nope"))


def test_decide_dispatch():
    assert decide(cycle(7)).kind == "unicyclic-cycle-vertex"
    assert decide(complete_bipartite(2, 2)).kind == "alpha-matching-bipartite"
    k13 = decide(star(3))
    assert not k13.verdict and k13.kind == "konig-egervary"
    assert decide(star(3), "omega-pairs").kind == "exhaustion"
    assert decide(complete(4)).kind == "disjoint-pair"
    with pytest.raises(StrategyMismatch):
        decide(path(4), "unicyclic")
    with pytest.raises(ValueError):
        decide(path(4), "bogus")


@given(unicyclic_graphs(max_n=9))
def test_decide_auto_agrees_with_enumeration(g):
    assert decide(g).verdict == has_two_disjoint_mis(g).verdict
