import math

import networkx as nx
import pytest
from hypothesis import given

from disjoint_mis.errors import GraphError, ParseError
from disjoint_mis.graph import (
    Graph,
    bipartition,
    closed_neighborhood,
    complement,
    complete,
    complete_bipartite,
    copies,
    corona,
    corona_uniform,
    cycle,
    delete_edges,
    delete_vertices,
    disjoint_union,
    empty_graph,
    friendship,
    girth,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_tree,
    neighborhood,
    neighborhood_set,
    odd_cycle,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    path,
    star,
    to_dot,
    to_edge_list,
    to_graph6,
    unique_cycle,
)

from .strategies import graphs


def as_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.mark.parametrize(
    "code, n, edges",
    [("A_", 2, [(0, 1)]), ("@", 1, []), ("Bg", 3, [(0, 1), (1, 2)]), ("?", 0, [])],
)
def test_graph6_known_strings(code, n, edges):
    g = parse_graph6(code)
    assert (g.n, g.edges()) == (n, edges)
    assert to_graph6(g) == code


@given(graphs(max_n=12))
def test_graph6_matches_networkx_codec(g):
    ours = to_graph6(g)
    theirs = nx.to_graph6_bytes(as_nx(g), header=False).decode().strip()
    assert ours == theirs
    assert parse_graph6(ours) == g


def test_graph6_long_form_round_trip():
    g = cycle(70)
    code = to_graph6(g)
    assert code.startswith("~")
    assert parse_graph6(code) == g
    assert code == nx.to_graph6_bytes(nx.cycle_graph(70), header=False).decode().strip()


def test_graph6_header_accepted():
    assert parse_graph6(">>graph6<<A_") == complete(2)


@pytest.mark.parametrize("bad", ["", "A", "A_x", "A\x7f", "Bgg", "B_"[:1] + "\x20"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(ParseError):
        parse_graph6(bad)


def test_graph6_rejects_nonzero_padding():
    # n=2 uses one data bit; the low padding bits must be zero
    with pytest.raises(ParseError):
        parse_graph6("A`")


def test_edge_list_examples():
    assert parse_edge_list("n 2\n0 1") == complete(2)
    assert parse_edge_list("n 3\n") == empty_graph(3)
    assert parse_edge_list("n 4\n0 1\n1 2\n2 3\n3 0") == cycle(4)


@pytest.mark.parametrize("bad", ["", "0 1", "n x", "n 2\n0 2", "n 2\n1 1", "n 2\n0", "n -1"])
def test_edge_list_errors(bad):
    with pytest.raises(ParseError):
        parse_edge_list(bad)


@given(graphs(max_n=9))
def test_edge_list_round_trip(g):
    assert parse_edge_list(to_edge_list(g)) == g
    assert parse_graph(to_edge_list(g)) == g
    assert parse_graph(to_graph6(g)) == g


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(2, (0b11, 0b01))  # self-loop
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(GraphError):
        complete(3).neighbors(3)


def test_induced_subgraph_examples():
    h, ids = induced_subgraph(cycle(5), [0, 1, 2])
    assert h == path(3) and ids == (0, 1, 2)
    g = friendship(2)
    assert induced_subgraph(g, range(g.n))[0] == g
    assert induced_subgraph(complete(4), [0, 2])[0] == complete(2)


def test_delete_vertices_examples():
    h, ids = delete_vertices(cycle(5), [0])
    assert h.edges() == [(0, 1), (1, 2), (2, 3)] and ids == (1, 2, 3, 4)
    assert delete_vertices(complete(2), [0, 1])[0].n == 0
    h, ids = delete_vertices(path(4), [1])
    assert ids == (0, 2, 3) and h.edges() == [(1, 2)]


def test_delete_edges_examples():
    assert delete_edges(cycle(4), [(0, 1)]).edges() == [(0, 3), (1, 2), (2, 3)]
    assert is_tree(delete_edges(cycle(4), [(0, 1)]))
    assert delete_edges(friendship(2), []) == friendship(2)
    assert delete_edges(complete(3), [(0, 1), (1, 2), (2, 0)]) == empty_graph(3)
    with pytest.raises(GraphError):
        delete_edges(path(3), [(0, 2)])


def test_union_and_copies():
    g = disjoint_union(complete(1), complete(2))
    assert (g.n, g.m) == (3, 1)
    m3 = copies(complete(2), 3)
    assert (m3.n, m3.m) == (6, 3) and all(d == 1 for d in m3.degrees())
    assert copies(complete(1), 1) == complete(1)


def test_corona_examples():
    f2 = corona(complete(1), [copies(complete(2), 2)])
    assert f2 == friendship(2)
    assert corona(path(2), [complete(1), complete(1)]) == Graph.from_edges(4, [(0, 1), (0, 2), (1, 3)])
    assert nx.is_isomorphic(as_nx(corona(path(2), [complete(1)] * 2)), nx.path_graph(4))
    c5k1 = corona_uniform(cycle(5), complete(1))
    assert c5k1.n == 10 and c5k1.m == 10
    with pytest.raises(GraphError):
        corona(path(2), [complete(1)])


def test_family_sizes():
    assert cycle(4).m == 4
    assert complete_bipartite(2, 3).m == 6
    f2 = friendship(2)
    assert (f2.n, f2.m) == (5, 6)
    assert star(3) == complete_bipartite(1, 3)
    assert complete(5).m == 10


def test_neighborhoods():
    assert neighborhood(path(3), 1) == (0, 2)
    assert neighborhood_set(complete(3), [0, 1, 2]) == (0, 1, 2)
    assert closed_neighborhood(complete(2), 0) == (0, 1)


def test_bipartition_examples():
    assert bipartition(cycle(4)) == ((0, 2), (1, 3))
    assert bipartition(cycle(5)) is None
    assert sorted(odd_cycle(cycle(5))) == [0, 1, 2, 3, 4]
    assert bipartition(complete(1)) == ((0,), ())


@given(graphs(max_n=9))
def test_bipartition_matches_networkx(g):
    sides = bipartition(g)
    assert (sides is not None) == nx.is_bipartite(as_nx(g))
    if sides is None:
        cyc = odd_cycle(g)
        assert len(cyc) % 2 == 1
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
    else:
        a, b = sides
        assert set(a) | set(b) == set(range(g.n)) and not set(a) & set(b)
        assert all((u in a) != (v in a) for u, v in g.edges())


def test_girth_examples():
    assert girth(cycle(7)) == 7
    assert girth(path(5)) == math.inf
    assert girth(complete(4)) == 3


@given(graphs(max_n=9))
def test_girth_matches_networkx(g):
    expected = nx.girth(as_nx(g))
    assert girth(g) == expected
    # bipartite iff no odd cycle, which in particular bounds the girth
    assert is_bipartite(g) == (odd_cycle(g) is None)


def test_unique_cycle_examples():
    assert unique_cycle(cycle(5)) == [0, 1, 2, 3, 4]
    assert unique_cycle(path(6)) is None
    c4p = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)])
    assert sorted(unique_cycle(c4p)) == [0, 1, 2, 3]
    assert unique_cycle(disjoint_union(cycle(3), cycle(3))) is None


def test_complement():
    assert complement(cycle(5)).m == 5
    assert is_connected(complement(cycle(7)))


def test_dot_output():
    assert to_dot(complete(2)) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n"
    assert to_dot(empty_graph(0)) == "graph G {\n}\n"
    dot = to_dot(cycle(4), {"S1": [0, 2], "S2": [1, 3]})
    assert dot.count("fillcolor=red") == 2 and dot.count("fillcolor=blue") == 2
    with pytest.raises(GraphError):
        to_dot(complete(2), {"S": [5]})
