#!/usr/bin/env python3
"""Regenerate the graph6 fixture files under fixtures/.

Connected graphs on at most 6 vertices and the small bipartite graphs come
from the networkx graph atlas (all graphs up to 7 vertices). Extra bipartite
graphs on 8 vertices are sampled with a fixed seed and reduced up to
isomorphism. Regular graphs are enumerated by labeled backtracking and then
reduced up to isomorphism.
"""
import itertools
import os
import random
import sys

import networkx as nx


def g6(g):
    g = nx.convert_node_labels_to_integers(g)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def dedup(graphs):
    buckets = {}
    out = []
    for g in graphs:
        key = (g.number_of_nodes(), g.number_of_edges(),
               nx.weisfeiler_lehman_graph_hash(g))
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(g, h) for h in bucket):
            continue
        bucket.append(g)
        out.append(g)
    return out


def regular_graphs(n, r):
    if n * r % 2 or r >= n:
        return []
    found = []
    deg = [0] * n
    edges = []
    pairs = list(itertools.combinations(range(n), 2))

    def rec(i):
        if all(d == r for d in deg):
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(edges)
            found.append(g)
            return
        if i == len(pairs):
            return
        u, v = pairs[i]
        # vertex u must be saturated once all its pairs are decided
        if deg[u] < r and deg[v] < r:
            deg[u] += 1
            deg[v] += 1
            edges.append((u, v))
            rec(i + 1)
            edges.pop()
            deg[u] -= 1
            deg[v] -= 1
        if i + 1 < len(pairs) and pairs[i + 1][0] != u and deg[u] != r:
            return
        if i + 1 == len(pairs) and deg[u] != r:
            return
        rec(i + 1)

    rec(0)
    return dedup(found)


def write(path, graphs):
    with open(path, "w") as f:
        for g in graphs:
            f.write(g6(g) + "\n")
    print(f"{path}: {len(graphs)} graphs")


def main(root):
    atlas = nx.graph_atlas_g()
    connected = [g for g in atlas
                 if 1 <= g.number_of_nodes() <= 6 and nx.is_connected(g)]
    write(os.path.join(root, "connected", "n_le6.g6"), connected)

    bip = [g for g in atlas if g.number_of_nodes() >= 1
           and nx.is_bipartite(g) and g.number_of_edges() <= 14]
    rng = random.Random(20240601)
    extra = []
    while len(dedup(extra)) < 120:
        a = rng.randint(1, 7)
        p = rng.choice([0.2, 0.35, 0.5, 0.65])
        g = nx.Graph()
        g.add_nodes_from(range(8))
        for u in range(a):
            for v in range(a, 8):
                if rng.random() < p:
                    g.add_edge(u, v)
        if g.number_of_edges() <= 14:
            extra.append(g)
    extra = dedup(extra)[:120]
    write(os.path.join(root, "bipartite", "m_le14.g6"), dedup(bip + extra))

    for r in (1, 2, 3):
        for n in range(r + 1, 9):
            gs = regular_graphs(n, r)
            if gs:
                write(os.path.join(root, "regular", f"r{r}_n{n}.g6"), gs)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else
         os.path.join(os.path.dirname(__file__), "..", "fixtures"))
