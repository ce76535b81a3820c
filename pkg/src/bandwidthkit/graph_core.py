"""Trees, layouts and the elementary operations on them.

Vertices are dense integer ids ``0..n-1``.  A layout is a sequence ``pos``
with ``pos[v]`` the 1-based rank of vertex ``v``; a sparse layout is any
injective integer assignment, given either as a sequence or as a mapping
from vertex to integer.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence, Union

from .errors import InvalidLayoutError, InvalidTreeError, InvalidVertexError

Positions = Union[Sequence[int], Mapping[int, int]]


@dataclass(frozen=True)
class Tree:
    """Immutable undirected tree over vertex ids ``0..n-1``.

    ``labels[v]`` is the external name of vertex ``v``; it defaults to ``v``.
    Construction validates tree-ness and raises :class:`InvalidTreeError`.
    """

    adj: tuple
    labels: tuple = field(default=None, compare=False)

    def __post_init__(self):
        adj = tuple(tuple(nbrs) for nbrs in self.adj)
        object.__setattr__(self, "adj", adj)
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(len(adj))))
        elif len(self.labels) != len(adj):
            raise InvalidTreeError("label table length differs from vertex count")
        _validate(adj)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None, labels=None) -> "Tree":
        edges = [(int(u), int(v)) for u, v in edges]
        if n is None:
            n = 1 + max((max(e) for e in edges), default=0)
        adj = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidTreeError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
            adj[u].append(v)
            adj[v].append(u)
        return cls(tuple(tuple(sorted(a)) for a in adj), labels)

    @classmethod
    def from_labeled_edges(cls, edges: Iterable[tuple[Hashable, Hashable]], vertices=()) -> "Tree":
        """Build a tree from edges over arbitrary labels.

        Labels are numbered in order of first appearance (``vertices`` first).
        """
        index: dict = {}
        for lab in vertices:
            index.setdefault(lab, len(index))
        pairs = []
        for u, v in edges:
            a = index.setdefault(u, len(index))
            b = index.setdefault(v, len(index))
            pairs.append((a, b))
        labels = [None] * len(index)
        for lab, i in index.items():
            labels[i] = lab
        return cls.from_edges(pairs, n=len(index), labels=tuple(labels))

    @property
    def n(self) -> int:
        return len(self.adj)

    def __len__(self):
        return len(self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adj) for v in nbrs if u < v]

    def check_vertex(self, v) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v!r} is not in the tree")
        return v

    def subtree(self, vertices: Iterable[int]) -> tuple["Tree", list[int]]:
        """Induced subtree on ``vertices``.

        Returns ``(sub, old)`` where ``old[i]`` is the id in ``self`` of vertex
        ``i`` of ``sub``; local ids follow ascending original ids.
        """
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        adj = [tuple(sorted(new[w] for w in self.adj[v] if w in new)) for v in old]
        return Tree(tuple(adj), tuple(self.labels[v] for v in old)), old

    def __repr__(self):
        return f"Tree(n={self.n}, edges={self.edges()})"


def _validate(adj):
    n = len(adj)
    if n == 0:
        raise InvalidTreeError("a tree needs at least one vertex")
    m2 = 0
    for u, nbrs in enumerate(adj):
        if len(set(nbrs)) != len(nbrs):
            raise InvalidTreeError(f"parallel edges at vertex {u}")
        for v in nbrs:
            if v == u:
                raise InvalidTreeError(f"self-loop at vertex {u}")
            if not 0 <= v < n:
                raise InvalidTreeError(f"vertex {u} has out-of-range neighbour {v}")
            if u not in adj[v]:
                raise InvalidTreeError(f"asymmetric adjacency between {u} and {v}")
        m2 += len(nbrs)
    if m2 != 2 * (n - 1):
        raise InvalidTreeError(f"{m2 // 2} edges on {n} vertices; a tree has n - 1")
    seen = bfs_distances_adj(adj, 0)
    if min(seen) < 0:
        missing = seen.index(-1)
        raise InvalidTreeError(f"graph is disconnected (vertex {missing} unreachable)")


def bfs_distances_adj(adj, source: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_distances(t: Tree, source: int) -> list[int]:
    return bfs_distances_adj(t.adj, t.check_vertex(source))


def bfs_parents(t: Tree, root: int) -> tuple[list[int], list[int]]:
    """BFS order from ``root`` and the parent array (root's parent is -1)."""
    parent = [-2] * t.n
    parent[root] = -1
    order = [root]
    for u in order:
        for w in t.adj[u]:
            if parent[w] == -2:
                parent[w] = u
                order.append(w)
    return order, parent


def distance(t: Tree, u: int, v: int) -> int:
    t.check_vertex(v)
    return bfs_distances(t, u)[v]


def tree_path(t: Tree, u: int, v: int) -> list[int]:
    """Vertices of the unique u-v path, from u to v."""
    t.check_vertex(u)
    t.check_vertex(v)
    _, parent = bfs_parents(t, v)
    path = [u]
    while path[-1] != v:
        path.append(parent[path[-1]])
    return path


def diameter_path(t: Tree) -> list[int]:
    """A longest path, found by double BFS.

    Among all longest paths the one whose endpoint pair (smaller id first)
    is lexicographically smallest is returned, oriented from the smaller
    endpoint.
    """
    if t.n == 1:
        return [0]
    d0 = bfs_distances(t, 0)
    far = max(range(t.n), key=lambda v: (d0[v], -v))
    diam = max(bfs_distances(t, far))
    # every vertex that ends some longest path is at eccentricity = diam
    ends = []
    da = bfs_distances(t, far)
    db = bfs_distances(t, max(range(t.n), key=lambda v: (da[v], -v)))
    for v in range(t.n):
        if max(da[v], db[v]) == diam:
            ends.append(v)
    best = None
    for a in ends:
        dist = bfs_distances(t, a)
        for b in ends:
            if b > a and dist[b] == diam:
                best = (a, b)
                break
        if best:
            break
    return tree_path(t, *best)


def diameter(t: Tree) -> int:
    if t.n == 1:
        return 0
    d0 = bfs_distances(t, 0)
    far = max(range(t.n), key=lambda v: d0[v])
    return max(bfs_distances(t, far))


def as_positions(t: Tree, layout: Positions) -> list[int]:
    """Normalise a (sparse) layout to a list indexed by vertex."""
    if isinstance(layout, Mapping):
        pos = []
        for v in range(t.n):
            if v not in layout:
                raise InvalidLayoutError(f"layout has no position for vertex {t.labels[v]!r}")
            pos.append(layout[v])
        if len(layout) != t.n:
            extra = sorted(set(layout) - set(range(t.n)), key=repr)
            raise InvalidLayoutError(f"layout places unknown vertices {extra[:5]!r}")
        return pos
    pos = list(layout)
    if len(pos) < t.n:
        raise InvalidLayoutError(f"layout has no position for vertex {t.labels[len(pos)]!r}")
    if len(pos) > t.n:
        raise InvalidLayoutError(f"layout has {len(pos)} entries for {t.n} vertices")
    return pos


def bandwidth_of_layout(t: Tree, layout: Positions) -> int:
    """Largest position difference over the edges of ``t``."""
    pos = as_positions(t, layout)
    return max((abs(pos[u] - pos[v]) for u, v in t.edges()), default=0)


def is_layout(t: Tree, layout: Positions) -> bool:
    try:
        pos = as_positions(t, layout)
    except InvalidLayoutError:
        return False
    return sorted(pos) == list(range(1, t.n + 1))


def check_layout(t: Tree, layout: Positions) -> list[int]:
    """Return the layout as a list, raising unless it is a bijection onto 1..n."""
    pos = as_positions(t, layout)
    seen = {}
    for v, r in enumerate(pos):
        if not isinstance(r, int) or not 1 <= r <= t.n:
            raise InvalidLayoutError(f"rank {r!r} of vertex {t.labels[v]!r} is outside 1..{t.n}")
        if r in seen:
            raise InvalidLayoutError(
                f"vertices {t.labels[seen[r]]!r} and {t.labels[v]!r} share rank {r}")
        seen[r] = v
    return pos


def compress(t: Tree, sparse: Positions) -> list[int]:
    """Order-isomorphic layout onto ``1..n`` of an injective sparse layout."""
    pos = as_positions(t, sparse)
    order = sorted(range(t.n), key=lambda v: pos[v])
    ranks = [0] * t.n
    for r, v in enumerate(order, start=1):
        if r > 1 and pos[v] == pos[order[r - 2]]:
            raise InvalidLayoutError(
                f"vertices {t.labels[order[r - 2]]!r} and {t.labels[v]!r} share position {pos[v]}")
        ranks[v] = r
    return ranks


def reverse_layout(layout: Sequence[int]) -> list[int]:
    n = len(layout)
    return [n + 1 - r for r in layout]


def fold_positions(t: Tree, layout: Positions, v: int) -> list[int]:
    """Sparse right-fold of ``layout`` around ``v`` (before compression).

    Vertices left of ``v`` (and ``v`` itself) get even values, vertices to its
    right odd ones, so the two sides interleave with ``v`` at 0.
    """
    t.check_vertex(v)
    pos = as_positions(t, layout)
    pv = pos[v]
    return [2 * (pv - p) if p <= pv else 2 * (p - pv) - 1 for p in pos]


def right_fold(t: Tree, layout: Positions, v: int) -> list[int]:
    """Fold ``layout`` around ``v``; ``v`` gets rank 1 and bandwidth at most doubles."""
    return compress(t, fold_positions(t, layout, v))


def bfs_layout(t: Tree, root: int | None = None) -> list[int]:
    """Breadth-first level order from a diameter endpoint; a cheap baseline."""
    if root is None:
        root = diameter_path(t)[0]
    order, _ = bfs_parents(t, root)
    ranks = [0] * t.n
    for r, v in enumerate(order, start=1):
        ranks[v] = r
    return ranks


def inclusion_interval(layout: Positions, vertices: Iterable[int]) -> tuple[int, int]:
    """``(min, max)`` position over ``vertices``."""
    if isinstance(layout, Mapping):
        vals = [layout[v] for v in vertices]
    else:
        vals = [layout[v] for v in vertices]
    if not vals:
        raise InvalidVertexError("inclusion interval of an empty set")
    return min(vals), max(vals)


def path_tree(n: int) -> Tree:
    return Tree.from_edges([(i, i + 1) for i in range(n - 1)], n=n)


def star_tree(leaves: int) -> Tree:
    return Tree.from_edges([(0, i) for i in range(1, leaves + 1)], n=leaves + 1)


def complete_binary_tree(height: int) -> Tree:
    """Complete binary tree with ``2**(height+1) - 1`` vertices, root 0."""
    n = 2 ** (height + 1) - 1
    return Tree.from_edges([((i - 1) // 2, i) for i in range(1, n)], n=n)
