"""Regenerate src/disjoint_mis/data/graphs_n*.g6.

One representative per isomorphism class, n = 1..8.  Level n+1 is built
from level n by adding a vertex with every possible neighborhood, then
deduplicated with networkx (WL hash buckets + VF2).  Counts are checked
against the known sequence 1, 2, 4, 11, 34, 156, 1044, 12346.

    python tools/make_catalog.py [NMAX]
"""

import sys
from collections import defaultdict
from pathlib import Path

import networkx as nx

EXPECTED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
OUT = Path(__file__).resolve().parents[1] / "src" / "disjoint_mis" / "data"


def invariant(g):
    degs = tuple(sorted(d for _, d in g.degree()))
    tri = tuple(sorted(nx.triangles(g).values()))
    return degs, tri, nx.weisfeiler_lehman_graph_hash(g, iterations=3)


def extend(level, n):
    buckets = defaultdict(list)
    for g in level:
        for code in range(1 << n):
            h = g.copy()
            h.add_node(n)
            h.add_edges_from((n, v) for v in range(n) if code >> v & 1)
            reps = buckets[invariant(h)]
            if not any(nx.is_isomorphic(h, r) for r in reps):
                reps.append(h)
    return [g for reps in buckets.values() for g in reps]


def main(nmax=8):
    OUT.mkdir(parents=True, exist_ok=True)
    level = [nx.empty_graph(1)]
    for n in range(1, nmax + 1):
        if n > 1:
            level = extend(level, n - 1)
        assert len(level) == EXPECTED[n], (n, len(level))
        lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in level)
        lines.sort(key=lambda s: (nx.from_graph6_bytes(s.encode()).number_of_edges(), s))
        (OUT / f"graphs_n{n}.g6").write_text("\n".join(lines) + "\n")
        print(f"n={n}: {len(lines)} graphs", flush=True)


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 8)
