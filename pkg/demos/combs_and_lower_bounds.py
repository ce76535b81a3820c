"""
Skewed combs and lower bounds
=============================

Nested combs force bandwidth up even though their local density and
pathwidth stay small.
"""

from bandwidthkit import lower_bounds_report, saxe_decide
from bandwidthkit.generators import gen_skewed_comb

for b, k in [(2, 2), (3, 2), (3, 3)]:
    comb = gen_skewed_comb(b, k)
    t = comb.tree
    density_floor, pw = lower_bounds_report(t)
    # smallest window width the exact search accepts
    w = 1
    while saxe_decide(t, w) is None:
        w += 1
    print(f"S({b},{k}): n={t.n}  density floor {density_floor}  pathwidth {pw}  bandwidth {w}")
