#!/usr/bin/env python3
"""Generate graph6 corpora of all 2-connected graphs on n vertices, up to isomorphism.

Graphs on n vertices are produced by adding a vertex (with every possible
neighbourhood) to each graph on n - 1 vertices and deduplicating by nauty's
canonical certificate. Output lines are sorted so the files are reproducible.

    python3 tools/gen_biconnected_corpus.py --max-n 9 --out-dir tests/data
"""
import argparse
import pathlib

import networkx as nx
import pynauty

# OEIS A002218 (n >= 3); used as a self-check.
EXPECTED = {3: 1, 4: 3, 5: 10, 6: 56, 7: 468, 8: 7123, 9: 194066}


def certificate(n, adj):
    g = pynauty.Graph(n, adjacency_dict={v: list(nb) for v, nb in enumerate(adj)})
    return pynauty.certificate(g)


def extend(graphs, n):
    seen = {}
    for adj in graphs:
        for mask in range(1 << (n - 1)):
            new = [set(nb) for nb in adj] + [set()]
            for v in range(n - 1):
                if mask >> v & 1:
                    new[v].add(n - 1)
                    new[n - 1].add(v)
            cert = certificate(n, new)
            if cert not in seen:
                seen[cert] = new
    return list(seen.values())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--out-dir", type=pathlib.Path, default=pathlib.Path("tests/data"))
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    graphs = [[set()]]
    for n in range(2, args.max_n + 1):
        graphs = extend(graphs, n)
        if n < 3:
            continue
        lines = []
        for adj in graphs:
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from((u, v) for u in range(n) for v in adj[u] if u < v)
            if nx.is_biconnected(g):
                lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
        lines.sort()
        if n in EXPECTED and len(lines) != EXPECTED[n]:
            raise SystemExit(f"n={n}: got {len(lines)} graphs, expected {EXPECTED[n]}")
        (args.out_dir / f"biconnected_n{n}.g6").write_text("\n".join(lines) + "\n")
        print(f"n={n}: {len(graphs)} graphs, {len(lines)} 2-connected")


if __name__ == "__main__":
    main()
