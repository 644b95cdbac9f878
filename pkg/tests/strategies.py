"""Hypothesis strategies shared by the test modules."""

import random

from hypothesis import strategies as st

from disjoint_mis.catalog import random_unicyclic
from disjoint_mis.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def unicyclic_graphs(draw, min_n=3, max_n=12):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_unicyclic(n, random.Random(seed))
