"""Tree pathwidth, recursive path decompositions and caterpillar structure.

Pathwidth uses the branch characterisation for trees: for ``k >= 1`` a tree
has pathwidth at least ``k + 1`` exactly when some vertex has three branches
(components after deleting it) of pathwidth at least ``k``.  Trees of
pathwidth at most one are the hair-length-one caterpillars, which gives a
linear base case.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotACaterpillarError, PreconditionError
from .graph_core import Tree, bfs_distances, bfs_parents, diameter_path, tree_path


@lru_cache(maxsize=None)
def min_vertices_for_pathwidth(k: int) -> int:
    """Fewest vertices of any tree with pathwidth at least ``k``."""
    if k <= 0:
        return 1
    if k == 1:
        return 2
    return 3 * min_vertices_for_pathwidth(k - 1) + 1


def _is_hair_one_caterpillar(adj, verts) -> bool:
    # the non-leaf vertices of a tree induce a subtree; it must be a path
    if len(verts) <= 2:
        return True
    inner = {v for v in verts if sum(1 for w in adj[v] if w in verts) >= 2}
    for v in inner:
        if sum(1 for w in adj[v] if w in inner) > 2:
            return False
    return True


class _PathwidthOracle:
    """Memoised ``pw(S) >= k`` tests for connected vertex subsets ``S``."""

    def __init__(self, t: Tree):
        self.adj = t.adj
        self.memo: dict = {}

    def at_least(self, verts: frozenset, k: int) -> bool:
        size = len(verts)
        if size < min_vertices_for_pathwidth(k):
            return False
        if k <= 1:
            return True
        if k == 2:
            return not _is_hair_one_caterpillar(self.adj, verts)
        key = (verts, k)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        result = self._three_heavy_branches(verts, k - 1)
        self.memo[key] = result
        return result

    def _three_heavy_branches(self, verts: frozenset, k: int) -> bool:
        adj = self.adj
        need = min_vertices_for_pathwidth(k)
        root = next(iter(verts))
        parent = {root: None}
        order = [root]
        for u in order:
            for w in adj[u]:
                if w in verts and w not in parent:
                    parent[w] = u
                    order.append(w)
        size = {}
        for u in reversed(order):
            size[u] = 1 + sum(size[w] for w in adj[u] if w in verts and parent.get(w) == u)
        total = len(verts)
        for v in order:
            big = []
            for w in adj[v]:
                if w not in verts:
                    continue
                s = size[w] if parent.get(w) == v else total - size[v]
                if s >= need:
                    big.append(w)
            if len(big) < 3:
                continue
            heavy = 0
            for w in big:
                if self.at_least(_component(adj, verts, w, v), k):
                    heavy += 1
                    if heavy == 3:
                        return True
        return False


def _component(adj, verts, start, banned) -> frozenset:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w in verts and w != banned and w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def pathwidth(t: Tree) -> int:
    oracle = _PathwidthOracle(t)
    everything = frozenset(range(t.n))
    k = 0
    while oracle.at_least(everything, k + 1):
        k += 1
    return k


def is_hair_one_caterpillar(t: Tree) -> bool:
    return _is_hair_one_caterpillar(t.adj, frozenset(range(t.n)))


# --------------------------------------------------------------------------
# recursive path decompositions


@dataclass(frozen=True)
class HangingSubtree:
    vertices: tuple          # sorted vertex ids of the component
    attach: tuple            # (path vertex, component vertex) joining edge

    @property
    def root(self) -> int:
        return self.attach[1]


@dataclass(frozen=True)
class RecursivePathDecomposition:
    path: tuple
    subtrees: tuple          # of HangingSubtree
    p: int

    def format(self, t: Tree | None = None) -> str:
        lab = (lambda v: str(t.labels[v])) if t is not None else str
        lines = ["P: " + " ".join(lab(v) for v in self.path)]
        for i, s in enumerate(self.subtrees, start=1):
            a, r = s.attach
            verts = ",".join(lab(v) for v in s.vertices)
            lines.append(f"T{i}: attach={lab(a)}-{lab(r)} verts={verts}")
        return "\n".join(lines) + "\n"


def _directed_subtrees(t: Tree):
    """Vertex set of the component of ``T - w`` containing ``x``, keyed ``(w, x)``."""
    order, parent = bfs_parents(t, 0)
    below = [None] * t.n
    for u in reversed(order):
        s = {u}
        for w in t.adj[u]:
            if parent[w] == u:
                s |= below[w]
        below[u] = frozenset(s)
    everything = frozenset(range(t.n))
    out = {}
    for u in range(t.n):
        for w in t.adj[u]:
            if parent[w] == u:
                out[(u, w)] = below[w]
            else:
                out[(u, w)] = everything - below[u]
    return out


def _deepest_extension(t: Tree, path: list[int], on_path: set) -> None:
    """Extend ``path`` at its last end by repeatedly stepping to the deepest side."""
    while True:
        end = path[-1]
        options = [w for w in t.adj[end] if w not in on_path]
        if not options:
            return
        best = max(options, key=lambda w: (_height_away(t, w, end), -w))
        path.append(best)
        on_path.add(best)


def _height_away(t: Tree, start: int, banned: int) -> int:
    depth = {start: 0}
    stack = [start]
    h = 0
    while stack:
        u = stack.pop()
        for w in t.adj[u]:
            if w != banned and w not in depth:
                depth[w] = depth[u] + 1
                h = max(h, depth[w])
                stack.append(w)
    return h


def recursive_path_decomposition(t: Tree, p: int) -> RecursivePathDecomposition:
    """Split ``t`` into a path plus hanging components of pathwidth below ``p``.

    Raises :class:`PreconditionError` when ``pathwidth(t) > p``.
    """
    if p < 1:
        raise PreconditionError("p must be at least 1")
    oracle = _PathwidthOracle(t)
    sub = _directed_subtrees(t)
    heavy = {key: oracle.at_least(verts, p) for key, verts in sub.items()}
    h = [sum(heavy[(w, x)] for x in t.adj[w]) for w in range(t.n)]
    top = max(h)
    if top >= 3:
        raise PreconditionError(f"tree has pathwidth greater than {p}")

    if top == 0:
        start = diameter_path(t)[0]
    else:
        start = min(w for w in range(t.n) if h[w] == top)
    ends = []
    for x in sorted(x for x in t.adj[start] if heavy[(start, x)]):
        arm = [x]
        prev, cur = start, x
        while True:
            forward = [y for y in t.adj[cur] if y != prev and heavy[(cur, y)]]
            if len(forward) > 1:
                raise PreconditionError(f"tree has pathwidth greater than {p}")
            if not forward:
                break
            prev, cur = cur, forward[0]
            arm.append(cur)
        ends.append(arm)
    path = list(reversed(ends[0])) if ends else []
    path.append(start)
    if len(ends) > 1:
        path.extend(ends[1])
    on_path = set(path)
    if len(on_path) != len(path):
        raise PreconditionError(f"tree has pathwidth greater than {p}")
    # grow both ends to leaves; components only shrink, so they stay light
    _deepest_extension(t, path, on_path)
    path.reverse()
    _deepest_extension(t, path, on_path)
    if path[0] > path[-1]:
        path.reverse()

    subtrees = []
    for w in path:
        for x in t.adj[w]:
            if x in on_path:
                continue
            if heavy[(w, x)]:
                raise PreconditionError(f"tree has pathwidth greater than {p}")
            subtrees.append(HangingSubtree(tuple(sorted(sub[(w, x)])), (w, x)))
    return RecursivePathDecomposition(tuple(path), tuple(subtrees), p)


def check_decomposition(t: Tree, d: RecursivePathDecomposition) -> None:
    """Raise ``AssertionError`` unless ``d`` satisfies every structural invariant."""
    path = list(d.path)
    assert path and tree_path(t, path[0], path[-1]) == path, "P is not a path of T"
    seen = set(path)
    on_path = set(path)
    for s in d.subtrees:
        verts = set(s.vertices)
        assert not verts & seen, "subtrees overlap"
        seen |= verts
        cross = [(u, w) for u in verts for w in t.adj[u] if w not in verts]
        assert len(cross) == 1, f"component has {len(cross)} edges leaving it"
        (r, a), = cross
        assert a in on_path and (a, r) == s.attach, "attachment edge mismatch"
        sub, _ = t.subtree(verts)
        assert pathwidth(sub) <= d.p - 1, "component pathwidth too large"
    assert seen == set(range(t.n)), "decomposition does not cover T"


# --------------------------------------------------------------------------
# caterpillars


@dataclass(frozen=True)
class Stray:
    id: int
    vertices: tuple     # ordered by distance from the backbone
    pos: int            # 1-based index of the backbone attachment vertex

    @property
    def length(self) -> int:
        return len(self.vertices)

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class CaterpillarView:
    tree: Tree
    backbone: tuple
    strays: tuple

    def attachment(self, stray: Stray) -> int:
        return self.backbone[stray.pos - 1]


def is_caterpillar(t: Tree) -> bool:
    try:
        caterpillar_view(t)
    except NotACaterpillarError:
        return False
    return True


def _arm(t: Tree, start: int, prev: int) -> list[int]:
    """Walk from ``start`` away from ``prev`` while the walk is unbranched."""
    arm = [start]
    while True:
        nxt = [w for w in t.adj[arm[-1]] if w != prev]
        if len(nxt) != 1:
            return arm
        prev = arm[-1]
        arm.append(nxt[0])


def caterpillar_view(t: Tree) -> CaterpillarView:
    """Maximized backbone and its strays.

    A tree is a caterpillar when all its vertices of degree three or more
    (branch vertices) lie on one path.  A maximized backbone is a longest
    such path: the path spanning the two extreme branch vertices, extended
    at each end by the longest pendant arm (ties: smaller end vertex id).
    The backbone is oriented from its smaller end; strays are numbered by
    ascending ``(pos, first vertex)``.
    """
    branch = [v for v in range(t.n) if t.degree(v) >= 3]
    if not branch:
        backbone = diameter_path(t)
    else:
        d0 = bfs_distances(t, branch[0])
        h1 = max(branch, key=lambda v: (d0[v], -v))
        d1 = bfs_distances(t, h1)
        h2 = max(branch, key=lambda v: (d1[v], -v))
        core = tree_path(t, h1, h2)
        on_core = set(core)
        for v in branch:
            if v not in on_core:
                raise NotACaterpillarError(
                    f"vertex {t.labels[v]!r} of degree {t.degree(v)} lies off every path "
                    f"through the other branch vertices")

        def arms(end, banned):
            found = [_arm(t, x, end) for x in t.adj[end] if x not in banned]
            return sorted(found, key=lambda a: (-len(a), a[-1]))

        if h1 == h2:
            first, second = arms(h1, ())[:2]
            backbone = first[::-1] + [h1] + second
        else:
            left = arms(h1, on_core)[0]
            right = arms(h2, on_core)[0]
            backbone = left[::-1] + core + right
        if backbone[0] > backbone[-1]:
            backbone.reverse()
    index = {v: i for i, v in enumerate(backbone, start=1)}
    found = []
    for bv in backbone:
        for x in t.adj[bv]:
            if x not in index:
                found.append((index[bv], x, tuple(_arm(t, x, bv))))
    found.sort()
    strays = tuple(Stray(i, verts, pos) for i, (pos, _, verts) in enumerate(found))
    return CaterpillarView(t, tuple(backbone), strays)


def simplified_instance(t: Tree, d: RecursivePathDecomposition):
    """Caterpillar replacing each hanging component by a pendant path.

    The result reuses the vertex ids of ``t``: path vertices keep their id and
    the pendant path of component ``i`` uses that component's ids in
    ascending order, nearest the backbone first.  Returns ``(t_s, pendant)``
    with ``pendant[i]`` the pendant-path vertices ordered by distance 1, 2, ...
    from the path.
    """
    edges = list(zip(d.path, d.path[1:]))
    pendant = []
    for s in d.subtrees:
        verts = s.vertices
        edges.append((s.attach[0], verts[0]))
        edges.extend(zip(verts, verts[1:]))
        pendant.append(tuple(verts))
    t_s = Tree.from_edges(edges, n=t.n, labels=t.labels)
    return t_s, pendant
