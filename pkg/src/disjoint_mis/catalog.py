"""Graph sources for sweeps: the bundled small-graph catalog, labeled trees, random graphs.

The bundled catalog holds one representative per isomorphism class for
``1 <= n <= 8`` (1, 2, 4, 11, 34, 156, 1044, 12346 graphs), one graph6 line
each, in ``data/graphs_n{n}.g6``.
"""

from __future__ import annotations

import heapq
import random
from collections.abc import Iterator, Sequence
from functools import lru_cache
from importlib import resources
from itertools import product
from pathlib import Path

from .graph import Graph, read_graph6_lines

CATALOG_MAX_N = 8
CATALOG_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


@lru_cache(maxsize=None)
def _catalog_lines(n: int) -> tuple[str, ...]:
    if not 1 <= n <= CATALOG_MAX_N:
        raise ValueError(f"bundled catalog covers 1 <= n <= {CATALOG_MAX_N}, not {n}")
    text = resources.files("disjoint_mis").joinpath("data", f"graphs_n{n}.g6").read_text()
    return tuple(ln.strip() for ln in text.splitlines() if ln.strip())


def catalog_graph6(nmax: int, nmin: int = 1) -> list[str]:
    out: list[str] = []
    for n in range(nmin, nmax + 1):
        out.extend(_catalog_lines(n))
    return out


def load_catalog(nmax: int, nmin: int = 1) -> list[Graph]:
    """All graphs with ``nmin <= n <= nmax`` up to isomorphism."""
    return read_graph6_lines(catalog_graph6(nmax, nmin))


def read_catalog_file(path: str | Path) -> list[Graph]:
    with open(path) as fh:
        return read_graph6_lines(fh)


def prufer_tree(seq: Sequence[int], n: int) -> Graph:
    """Decode a Pruefer sequence of length ``n - 2`` into a labeled tree on ``n`` vertices."""
    if n == 1:
        return Graph(1, (0,))
    if len(seq) != n - 2 or any(not 0 <= x < n for x in seq):
        raise ValueError(f"invalid Pruefer sequence {list(seq)} for n={n}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return Graph.from_edges(n, edges)


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on ``n`` vertices, ``n ** (n - 2)`` of them, in Pruefer order."""
    if n < 1:
        raise ValueError("trees need n >= 1")
    if n <= 2:
        yield prufer_tree((), n)
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_tree(seq, n)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for v in range(1, n) for u in range(v) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    if n <= 2:
        return prufer_tree((), n)
    return prufer_tree([rng.randrange(n) for _ in range(n - 2)], n)


def random_unicyclic(n: int, rng: random.Random) -> Graph:
    """Uniform labeled tree plus one uniformly chosen non-edge."""
    if n < 3:
        raise ValueError("unicyclic graphs need n >= 3")
    tree = random_tree(n, rng)
    non_edges = [(u, v) for v in range(1, n) for u in range(v) if not tree.adj[u] >> v & 1]
    u, v = rng.choice(non_edges)
    return Graph.from_edges(n, tree.edges() + [(u, v)])


def random_bipartite(p_side: int, q_side: int, prob: float, rng: random.Random) -> Graph:
    edges = [(a, p_side + b) for a in range(p_side) for b in range(q_side) if rng.random() < prob]
    return Graph.from_edges(p_side + q_side, edges)


__all__ = [
    "CATALOG_COUNTS",
    "CATALOG_MAX_N",
    "all_labeled_trees",
    "catalog_graph6",
    "load_catalog",
    "prufer_tree",
    "random_bipartite",
    "random_graph",
    "random_tree",
    "random_unicyclic",
    "read_catalog_file",
]
