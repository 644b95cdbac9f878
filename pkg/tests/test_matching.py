import networkx as nx
import pytest
from hypothesis import given, settings

from disjoint_mis import oracles
from disjoint_mis.errors import GraphError, PreconditionError
from disjoint_mis.graph import Graph, complete, complete_bipartite, cycle, friendship, path, star
from disjoint_mis.matching import (
    Matching,
    can_match_into,
    forest_matching,
    forest_perfect_matching,
    has_perfect_matching,
    match_into,
    matching_number,
    max_matching_bipartite,
    max_matching_general,
)

from .strategies import graphs


def test_matching_rejects_shared_vertices():
    with pytest.raises(GraphError):
        Matching.from_pairs([(0, 1), (1, 2)])
    m = Matching.from_pairs([(3, 2), (0, 1)])
    assert m.edges == ((0, 1), (2, 3)) and m.mate() == {0: 1, 1: 0, 2: 3, 3: 2}


@pytest.mark.parametrize("g, size", [(cycle(6), 3), (complete_bipartite(2, 3), 2), (path(5), 2)])
def test_bipartite_examples(g, size):
    m = max_matching_bipartite(g)
    assert m.size == size and m.is_matching_of(g)


def test_bipartite_rejects_bad_sides():
    with pytest.raises(GraphError):
        max_matching_bipartite(cycle(5))
    with pytest.raises(GraphError):
        max_matching_bipartite(cycle(4), ([0, 1], [2, 3]))


@pytest.mark.parametrize("g, size", [(cycle(5), 2), (complete(4), 2), (friendship(2), 2)])
def test_general_examples(g, size):
    assert max_matching_general(g).size == size == oracles.matching_number(g)


def test_perfect_matching_examples():
    assert has_perfect_matching(cycle(6)) is not None
    assert has_perfect_matching(cycle(5)) is None
    assert has_perfect_matching(path(4)).edges == ((0, 1), (2, 3))


def test_forest_perfect_matching_examples():
    assert forest_perfect_matching(path(4)).edges == ((0, 1), (2, 3))
    assert forest_perfect_matching(path(3)) is None
    assert forest_perfect_matching(star(3)) is None
    with pytest.raises(PreconditionError):
        forest_perfect_matching(cycle(4))


def test_forest_obstructions():
    _, why = forest_matching(path(3))
    assert why.kind == "odd-component"
    _, why = forest_matching(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    assert why is not None


def test_match_into_examples():
    assert match_into(cycle(4), [0, 2], [1, 3]) is not None
    assert match_into(star(3), [1, 2, 3], [0]) is None
    m = match_into(path(4), [0, 3], [1, 2])
    assert m.edges == ((0, 1), (2, 3))
    with pytest.raises(GraphError):
        match_into(path(4), [0, 1], [1, 2])


@settings(max_examples=300)
@given(graphs(max_n=10))
def test_blossom_matches_brute_force(g):
    mu = matching_number(g)
    assert mu == oracles.matching_number(g)
    m = max_matching_general(g)
    assert m.is_matching_of(g) and m.size == mu
    assert mu == len(nx.max_weight_matching(nx.Graph(g.edges()), maxcardinality=True))


@given(graphs(max_n=9))
def test_canonical_matching_is_deterministic_and_minimal(g):
    a, b = max_matching_general(g), max_matching_general(g)
    assert a == b
    # no lexicographically earlier edge can replace the first one
    if a.size:
        first = a.edges[0]
        for e in g.edges():
            if e < first:
                rest = Graph.from_edges(g.n, [f for f in g.edges() if e[0] not in f and e[1] not in f])
                assert matching_number(rest) < a.size - 1


@given(graphs(max_n=9))
def test_can_match_into_agrees_with_hall(g):
    half = g.n // 2
    a, b = list(range(half)), list(range(half, g.n))
    amask = sum(1 << v for v in a)
    bmask = sum(1 << v for v in b)
    assert can_match_into(g, amask, bmask) == oracles.hall_condition(g, a, b)
    assert (match_into(g, a, b) is not None) == oracles.hall_condition(g, a, b)
