"""
Laying out a caterpillar
========================

Build a caterpillar, look at its backbone and strays, then run the
48b^3 approximation for a few values of b.
"""

from bandwidthkit import bandwidth_of_layout, cat_alg, caterpillar_view
from bandwidthkit.generators import gen_caterpillar

# a 40-vertex spine with a few strays; lengths are per spine vertex
profile = [0] * 40
profile[10] = 3
profile[11] = (2, 5)
profile[25] = 12
t = gen_caterpillar(40, profile)

view = caterpillar_view(t)
print("backbone length", len(view.backbone))
for q in view.strays:
    print(f"  stray {q.id}: pos {q.pos}, length {q.length}")

# b = 1 is refuted by the stray of length 12 (a comb of depth 2);
# larger b gives a layout far below the guarantee
for b in (1, 2, 3):
    res = cat_alg(t, b)
    if res.accepted:
        print(f"b={b}: bandwidth {bandwidth_of_layout(t, res.layout)} (guarantee {res.bound}, "
              f"{res.chi} interval colours)")
    else:
        print(f"b={b}: rejected, {res.reason}")
