"""
Size of the hardness reduction
==============================

The caterpillar built from a clique instance is enormous even for a
triangle.  The sizes are computed in closed form and cross-checked against
a gadget census; a shortened demo instance can still be materialised.
"""

from bandwidthkit import pathwidth
from bandwidthkit.generators import materialize_reduction, reduction_sizes

s = reduction_sizes(3, 2, 3)
print(f"b = {s.b}, pull factor = {s.p}, m1 = {s.m1}, m2 = {s.m2}, m3 = {s.m3}")
for sector, count in s.sectors.items():
    print(f"  {sector:16s} {count:>14,d}")
print(f"  {'total':16s} {s.total:>14,d}")

demo = materialize_reduction(3, 2, [(1, 2), (2, 3), (1, 3)], demo_scale=3)
print("demo instance:", demo.tree.n, "vertices, pathwidth", pathwidth(demo.tree))
