"""
Exact bandwidth on small trees
==============================

Two independent exact methods and the density bound, compared on every
tree with seven vertices.
"""

import networkx as nx

from bandwidthkit import Tree, exact_bandwidth_bruteforce, local_density, saxe_decide

rows = []
for g in nx.nonisomorphic_trees(7):
    t = Tree.from_edges(g.edges(), n=7)
    bw, _ = exact_bandwidth_bruteforce(t)
    w = 1
    while saxe_decide(t, w) is None:
        w += 1
    rows.append((bw, w, local_density(t)[0]))

for bw, w, dens in sorted(rows):
    print(f"brute force {bw}  windowed {w}  density {dens}")
assert all(bw == w for bw, w, _ in rows)
