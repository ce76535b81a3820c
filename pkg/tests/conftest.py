import random
from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import strategies as st

from bandwidthkit import Tree

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@lru_cache(maxsize=None)
def _trees_of_size(n):
    if n == 1:
        return (Tree(((),)),)
    return tuple(Tree.from_edges(g.edges(), n=n) for g in nx.nonisomorphic_trees(n))


def all_trees(n_max, n_min=1):
    """Every tree up to isomorphism with ``n_min <= n <= n_max`` vertices."""
    for n in range(n_min, n_max + 1):
        yield from _trees_of_size(n)


def tree_from_pruefer(seq, n):
    if n == 1:
        return Tree(((),))
    if n == 2:
        return Tree.from_edges([(0, 1)], n=2)
    g = nx.from_prufer_sequence(list(seq))
    return Tree.from_edges(g.edges(), n=n)


@st.composite
def trees(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        return tree_from_pruefer([], n)
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return tree_from_pruefer(seq, n)


def random_tree(n, rng):
    if n <= 2:
        return tree_from_pruefer([], n)
    return tree_from_pruefer([rng.randrange(n) for _ in range(n - 2)], n)


# ---------------------------------------------------------------- oracles
# Deliberately naive reference implementations, independent of the package.


def naive_bandwidth(t):
    best = None
    for perm in permutations(range(1, t.n + 1)):
        bw = max((abs(perm[u] - perm[v]) for u, v in t.edges()), default=0)
        if best is None or bw < best:
            best = bw
    return best


def naive_pathwidth(t):
    """Vertex separation number by subset DP (equals pathwidth)."""
    n = t.n
    adj_mask = [sum(1 << w for w in t.adj[v]) for v in range(n)]
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def g(mask):
        if mask == 0:
            return 0
        boundary = sum(1 for v in range(n) if mask >> v & 1 and adj_mask[v] & ~mask & full)
        best = min(g(mask & ~(1 << v)) for v in range(n) if mask >> v & 1)
        return max(boundary, best)

    return g(full)


def naive_backbones(t):
    """All longest paths containing every vertex of degree >= 3."""
    branch = {v for v in range(t.n) if t.degree(v) >= 3}
    paths = []
    g = nx.Graph(t.edges())
    g.add_nodes_from(range(t.n))
    for a, b in combinations(range(t.n), 2):
        p = nx.shortest_path(g, a, b)
        if branch <= set(p):
            paths.append(p)
    if t.n == 1:
        paths.append([0])
    if not paths:
        return []
    best = max(len(p) for p in paths)
    return [p for p in paths if len(p) == best]


@pytest.fixture
def rng():
    return random.Random(12345)
