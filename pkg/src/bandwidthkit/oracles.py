"""Exact references for small trees.

Brute-force bandwidth (branch and bound), a windowed decision procedure in
the style of Saxe, exact local density and the two classical lower bounds.
The exponential methods are guarded; ``BANDWIDTHKIT_GUARDS`` (for example
``"brute=12,saxe=5"``) raises the limits.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .decomposition import pathwidth
from .errors import ParameterError, TooLargeError
from .graph_core import Tree, bandwidth_of_layout, bfs_distances_adj, bfs_layout

DEFAULT_GUARDS = {"brute": 10, "saxe": 4}


def guards() -> dict[str, int]:
    """Current size guards, with overrides read from ``BANDWIDTHKIT_GUARDS``."""
    out = dict(DEFAULT_GUARDS)
    raw = os.environ.get("BANDWIDTHKIT_GUARDS", "")
    for item in filter(None, (s.strip() for s in raw.split(","))):
        key, _, val = item.partition("=")
        key = key.strip()
        if key not in out:
            raise ParameterError(f"unknown guard {key!r} in BANDWIDTHKIT_GUARDS")
        try:
            out[key] = int(val)
        except ValueError:
            raise ParameterError(f"guard {key!r} needs an integer value, got {val!r}") from None
    return out


# --------------------------------------------------------------------------
# brute force


def exact_bandwidth_bruteforce(t: Tree) -> tuple[int, list[int]]:
    """Minimum bandwidth and a witness layout, by branch and bound.

    Positions are filled left to right.  A partial order is abandoned when a
    placed edge already reaches the incumbent, or when some placed vertex
    still has more unplaced neighbours than slots left within reach.
    """
    limit = guards()["brute"]
    if t.n > limit:
        raise TooLargeError(f"brute force is limited to n <= {limit} (got {t.n})", t.n)
    n = t.n
    if n == 1:
        return 0, [1]
    adj = t.adj
    best_layout = bfs_layout(t)
    best = bandwidth_of_layout(t, best_layout)
    floor = max(1, math.ceil(max(len(a) for a in adj) / 2))
    if best == floor:
        return best, best_layout

    pos = [0] * n            # 0 = unplaced
    missing = [len(a) for a in adj]   # unplaced neighbours

    def extend(i: int, target: int) -> bool:
        # i = next position to fill (1-based); all stretches must stay <= target
        if i > n:
            return True
        for v in range(n):
            if pos[v]:
                continue
            ok = True
            for w in adj[v]:
                if pos[w] and i - pos[w] > target:
                    ok = False
                    break
            if not ok:
                continue
            pos[v] = i
            for w in adj[v]:
                missing[w] -= 1
            # a placed vertex at position j needs its remaining neighbours in (i, j+target]
            feasible = all(
                missing[u] <= pos[u] + target - i for u in range(n) if pos[u] and missing[u])
            if feasible and extend(i + 1, target):
                return True
            for w in adj[v]:
                missing[w] += 1
            pos[v] = 0
        return False

    target = best - 1
    while target >= floor:
        if not extend(1, target):
            break
        best, best_layout = target, pos[:]
        pos = [0] * n
        missing = [len(a) for a in adj]
        target -= 1
    return best, best_layout


# --------------------------------------------------------------------------
# windowed decision procedure


def saxe_decide(t: Tree, b: int) -> list[int] | None:
    """A layout of bandwidth at most ``b``, or None when none exists.

    Depth-first search over states ``(window, dangling)``: the ordered
    last ``min(b, placed)`` vertices and the set of edges ``(w, x)`` with
    ``w`` placed and ``x`` not yet placed.  A vertex leaving the window must
    have no dangling edge.  Because the tree is connected and every placed
    vertex outside the window is saturated, the state determines the set of
    placed vertices.
    """
    limit = guards()["saxe"]
    if isinstance(b, bool) or not isinstance(b, int) or b < 1:
        raise ParameterError(f"b must be a positive integer, got {b!r}")
    if b > limit:
        raise TooLargeError(f"windowed decision is limited to b <= {limit} (got {b})", b)
    n = t.n
    if n == 1:
        return [1]
    adj = t.adj
    full = (1 << n) - 1
    start = ((), frozenset())
    seen = {start: (0, None, None)}   # state -> (placed mask, parent state, placed vertex)
    stack = [start]
    while stack:
        state = stack.pop()
        window, dangling = state
        mask = seen[state][0]
        for v in range(n):
            if mask >> v & 1:
                continue
            if len(window) == b:
                drop = window[0]
                # the only edge the dropped vertex may still miss is the one to v
                if any(w == drop and x != v for w, x in dangling):
                    continue
                rest = window[1:]
            else:
                rest = window
            new_mask = mask | (1 << v)
            nd = {(w, x) for w, x in dangling if x != v}
            nd.update((v, x) for x in adj[v] if not new_mask >> x & 1)
            nxt = (rest + (v,), frozenset(nd))
            if nxt in seen:
                continue
            seen[nxt] = (new_mask, state, v)
            if new_mask == full:
                order = []
                cur = nxt
                while cur != start:
                    _, parent, placed = seen[cur]
                    order.append(placed)
                    cur = parent
                order.reverse()
                layout = [0] * n
                for r, u in enumerate(order, start=1):
                    layout[u] = r
                return layout
            stack.append(nxt)
    return None


def exact_bandwidth_saxe(t: Tree, b_max: int | None = None) -> tuple[int, list[int]]:
    """Smallest ``b`` accepted by :func:`saxe_decide`, with its layout."""
    if t.n == 1:
        return 0, [1]
    if b_max is None:
        b_max = guards()["saxe"]
    for b in range(1, b_max + 1):
        layout = saxe_decide(t, b)
        if layout is not None:
            return b, layout
    raise TooLargeError(f"bandwidth exceeds the windowed-search limit {b_max}", b_max)


# --------------------------------------------------------------------------
# local density


@dataclass(frozen=True)
class DensityWitness:
    center: tuple          # (v,) for a vertex ball, (u, v) for an edge ball
    radius: int
    count: int
    diameter: int
    ratio: Fraction


def distance_matrix(t: Tree) -> np.ndarray:
    return np.array([bfs_distances_adj(t.adj, s) for s in range(t.n)], dtype=np.int64)


def local_density(t: Tree) -> tuple[Fraction, DensityWitness]:
    """Exact ``max (|V'| - 1) / diam(G')`` over subtrees ``G'``.

    A subtree of diameter ``d`` sits inside the ball of radius ``ceil(d/2)``
    around its centre (a vertex for even ``d``, an edge for odd ``d``), and
    that ball is a subtree of diameter at most ``d``.  Scanning all vertex
    and edge balls, dividing by each ball's true diameter, is therefore
    exact.
    """
    if t.n < 2:
        raise ParameterError("local density needs at least two vertices")
    dist = distance_matrix(t)
    best = None
    centres = [((v,), dist[v]) for v in range(t.n)]
    centres += [((u, v), np.minimum(dist[u], dist[v])) for u, v in t.edges()]
    for centre, reach in centres:
        for r in range(int(reach.max()) + 1):
            ball = np.flatnonzero(reach <= r)
            if len(ball) < 2:
                continue
            sub = dist[np.ix_(ball, ball)]
            # double sweep is exact on trees
            a = int(np.argmax(sub[0]))
            diam = int(sub[a].max())
            ratio = Fraction(len(ball) - 1, diam)
            if best is None or ratio > best.ratio:
                best = DensityWitness(centre, r, len(ball), diam, ratio)
    return best.ratio, best


def local_density_enumerate(t: Tree) -> Fraction:
    """The same maximum by enumerating every connected vertex subset."""
    if t.n < 2:
        raise ParameterError("local density needs at least two vertices")
    dist = distance_matrix(t)
    best = Fraction(0)
    for size in range(2, t.n + 1):
        for subset in combinations(range(t.n), size):
            idx = list(subset)
            sub = dist[np.ix_(idx, idx)]
            # a subset of a tree is connected iff it has size - 1 internal edges
            if int((sub == 1).sum()) // 2 != size - 1:
                continue
            best = max(best, Fraction(size - 1, int(sub.max())))
    return best


def lower_bounds_report(t: Tree) -> tuple[int, int]:
    """``(ceil(D(t)), pw(t))``; both are lower bounds on the bandwidth."""
    if t.n < 2:
        return 0, 0
    d, _ = local_density(t)
    return math.ceil(d), pathwidth(t)
