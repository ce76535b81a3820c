"""
Recursive layout of a tree of pathwidth two
===========================================

A complete binary tree is split into a path and light components.  Each
component is laid out on its own, the path plus pendant paths is laid out
as a caterpillar, and the pieces are folded together.
"""

from bandwidthkit import (
    bandwidth_of_layout,
    complete_binary_tree,
    exact_bandwidth_saxe,
    pathwidth,
    recursive_path_decomposition,
    search_smallest_b,
    simplified_instance,
    tree_alg,
)

t = complete_binary_tree(3)
p = pathwidth(t)
print("n =", t.n, " pathwidth =", p)

d = recursive_path_decomposition(t, p)
print(d.format(t))

t_s, pendant = simplified_instance(t, d)
print("simplified instance has", t_s.n, "vertices and", len(pendant), "pendant paths")

res = tree_alg(t, p, 2, debug=True)
print("b=2:", "layout" if res.accepted else "rejected",
      "bandwidth", bandwidth_of_layout(t, res.layout) if res.accepted else "-",
      "certified", res.certified_bound, "nominal", res.ratio_bound)

log = []
b_star, best = search_smallest_b(t, log=log)
print("smallest accepted b:", b_star, "after", len(log), "attempts")
print("layout bandwidth:", bandwidth_of_layout(t, best.layout))
print("exact bandwidth:", exact_bandwidth_saxe(t)[0])
