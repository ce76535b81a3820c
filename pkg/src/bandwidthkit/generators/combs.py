"""Skewed Cantor combs: nested caterpillars whose bandwidth is at least their depth."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParameterError
from ..graph_core import Tree, bfs_distances, tree_path


@dataclass(frozen=True)
class CombLevel:
    """One joining step: ``v`` is the middle vertex, ``stray`` hangs off it."""

    depth: int
    x: int
    y: int
    v: int
    stray: tuple


@dataclass(frozen=True)
class SkewedComb:
    tree: Tree
    x: int
    y: int
    k: int
    b: int
    levels: tuple      # every CombLevel of the construction, innermost first


def gen_skewed_comb(b: int, k: int, stray_slack=1) -> SkewedComb:
    """Smallest skewed ``b``-comb of depth ``k`` (joining paths of length 2).

    Each stray gets ``ceil(2(b-1) d * stray_slack)`` vertices, ``d`` being the
    largest distance from its attachment vertex to the comb's spine.
    """
    if not isinstance(b, int) or b < 2:
        raise ParameterError(f"b must be an integer >= 2, got {b!r}")
    if not isinstance(k, int) or not 1 <= k <= b:
        raise ParameterError(f"k must be an integer in [1, {b}], got {k!r}")
    slack = Fraction(stray_slack)
    if slack < 1:
        raise ParameterError(f"stray_slack must be at least 1, got {stray_slack!r}")

    edges: list[tuple[int, int]] = []
    levels: list[CombLevel] = []
    counter = [0]

    def fresh():
        counter[0] += 1
        return counter[0] - 1

    def build(depth):
        if depth == 1:
            x, y = fresh(), fresh()
            edges.append((x, y))
            return x, y, 1
        x, y, span = build(depth - 1)
        x2, y2, _ = build(depth - 1)
        v = fresh()
        edges.extend([(y, v), (v, x2)])
        d = span + 1
        size = math.ceil(2 * (b - 1) * d * slack)
        stray = []
        prev = v
        for _ in range(size):
            w = fresh()
            edges.append((prev, w))
            stray.append(w)
            prev = w
        levels.append(CombLevel(depth, x, y2, v, tuple(stray)))
        return x, y2, 2 * span + 2

    x, y, _ = build(k)
    tree = Tree.from_edges(edges, n=counter[0])
    comb = SkewedComb(tree, x, y, k, b, tuple(levels))
    validate_skewed_comb(comb)
    return comb


def validate_skewed_comb(comb: SkewedComb) -> None:
    """Check the stray-size condition at every level, recomputing distances."""
    t, b = comb.tree, comb.b
    for lev in comb.levels:
        spine = tree_path(t, lev.x, lev.y)
        if lev.v not in spine[1:-1]:
            raise AssertionError(f"level {lev.depth}: joining vertex not inside the spine")
        dist = bfs_distances(t, lev.v)
        d = max(dist[u] for u in spine)
        if len(lev.stray) < 2 * (b - 1) * d:
            raise AssertionError(
                f"level {lev.depth}: stray has {len(lev.stray)} vertices, needs {2 * (b - 1) * d}")
        chain = [lev.v, *lev.stray]
        for a, c in zip(chain, chain[1:]):
            if c not in t.adj[a]:
                raise AssertionError(f"level {lev.depth}: stray is not a path from v")
        on_spine = set(spine)
        if any(u in on_spine for u in lev.stray):
            raise AssertionError(f"level {lev.depth}: stray meets the spine")
