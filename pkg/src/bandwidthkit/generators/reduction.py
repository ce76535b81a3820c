"""Size arithmetic and materialisation of the Even-Clique-to-bandwidth reduction.

The instance is a main path ``u_1 .. u_L`` cut into nine sectors (first wall,
first wasteland, first gateland, selector, middle gateland, validator, last
gateland, last wasteland, last wall), ``k`` threads hanging from ``u_2`` and
two fillers.  Honest parameters give billions of vertices, so the sizes are
computed in closed form; :func:`materialize_reduction` builds either an
honest instance within a vertex budget or a demo instance whose long
stretches are shortened to ``demo_scale`` (structurally faithful, but with
no bandwidth guarantee).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..decomposition import pathwidth
from ..errors import ParameterError, TooLargeError
from ..graph_core import Tree
from .gadgets import GadgetSpec

SECTORS = (
    "first wall", "first wasteland", "first gateland", "selector", "middle gateland",
    "validator", "last gateland", "last wasteland", "last wall", "threads", "fillers",
)


def _check_nk(n, k, m=None):
    for name, val in (("n", n), ("k", k)):
        if isinstance(val, bool) or not isinstance(val, int) or val < 1:
            raise ParameterError(f"{name} must be a positive integer, got {val!r}")
    if k % 2:
        raise ParameterError(f"k must be even, got {k}")
    if k > n:
        raise ParameterError(f"k = {k} exceeds n = {n}")
    if m is not None and not 0 <= m <= n * (n - 1) // 2:
        raise ParameterError(f"m = {m} is not an edge count of a simple graph on {n} vertices")


@dataclass(frozen=True)
class ReductionPlan:
    """Segment lengths of the main path, threads and fillers.

    Gate counts are numbers of consecutive gates; each gate spans two edges.
    ``zone_len`` is the edge length of one validator zone.
    """

    n: int
    k: int
    m: int
    b: int
    p: int
    wasteland1: int        # index of the first gateland's first vertex
    gates1: int
    sel_gap_gates: int
    sel_tail_gates: int
    mid_gates: int
    zone_len: int
    val_tail_gates: int
    gates3: int
    wasteland3: int        # edges from the end of the last gateland to the last wall
    thread_tail: int
    filler1: int
    filler2: int
    demo: bool = False

    # derived main-path indices (1-based)
    @property
    def sel_start(self):
        return self.wasteland1 + 2 * self.gates1

    @property
    def pull(self):
        return 3 + 2 * self.sel_gap_gates

    @property
    def sel_holes_end(self):
        return self.sel_start + (self.n - 1) * self.pull + 3

    @property
    def m2(self):
        return self.sel_holes_end + 2 * self.sel_tail_gates

    @property
    def val_start(self):
        return self.m2 + 2 * self.mid_gates

    @property
    def validation_zone(self):
        return self.val_start + (self.n - 1) * self.zone_len

    @property
    def m3(self):
        return self.val_start + (2 * self.n - 1) * self.zone_len + 2 * self.val_tail_gates

    @property
    def gates3_end(self):
        return self.m3 + 2 * self.gates3

    @property
    def length(self):
        return self.gates3_end + self.wasteland3

    @property
    def knot_index(self):
        return self.sel_start + 1

    @property
    def block_start(self):
        return self.validation_zone

    @property
    def block_len(self):
        return 4 * self.n + 3

    @property
    def thread_last(self):
        return self.block_start + self.n * self.block_len - 1 + self.thread_tail

    @property
    def thread_vertices(self):
        # t_3 .. t_last; t_2 is u_2
        return self.thread_last - 2

    def sector_bounds(self) -> list[tuple[str, int, int]]:
        """Inclusive main-path index range of each of the nine sectors."""
        cuts = [1, 2, self.wasteland1, self.sel_start, self.m2, self.val_start, self.m3,
                self.gates3_end, self.length, self.length + 1]
        return [(name, lo, hi - 1) for name, lo, hi in zip(SECTORS[:9], cuts, cuts[1:])]


def _fillers(n, k, m, b, p):
    f1 = (n - k) * (3 * b // 2 - k - 2) + (2 * b + 1) * (p * (n - 1) + 3)
    f2 = ((b - 1) * (4 * n + 3) * (2 * n - 1) + 2 * b * (4 * n + 3) * (2 * n - 1)
          - (k * (2 * n - 1) * (4 * n + 3)
             + k * (n * (3 * b // 2 - k - 2) + n * n - n - 2 * m)
             + 2 * n * (3 * b // 4 - k - 2)))
    return f1, f2


def honest_plan(n: int, k: int, m: int) -> ReductionPlan:
    _check_nk(n, k, m)
    b, p = 4 * k + 16, 4 * n + 3
    m1 = p * n * k + 2
    m2 = (2 * b + 1) * m1 + (2 * b + 1) * (p * (n - 1) + 3)
    m3 = (2 * b + 1) * m2 + (2 * b + 1) * (2 * n - 1) * (4 * n + 3)
    f1, f2 = _fillers(n, k, m, b, p)
    if f2 < 0:
        raise ParameterError(f"second filler length is negative ({f2})")
    return ReductionPlan(
        n, k, m, b, p,
        wasteland1=m1, gates1=b * m1, sel_gap_gates=(p - 3) // 2,
        sel_tail_gates=b * (p * (n - 1) + 3), mid_gates=b * m2, zone_len=4 * n + 3,
        val_tail_gates=b * (2 * n - 1) * (4 * n + 3), gates3=b * m3,
        wasteland3=b * b * (2 * b + 1) * m3 + 1 - (2 * b + 1) * m3,
        thread_tail=b * (2 * b + 1) * m3, filler1=f1, filler2=f2)


def demo_plan(n: int, k: int, m: int, scale: int) -> ReductionPlan:
    """Plan with every multiplicative stretch replaced by ``scale``.

    Gadget sizes, the pull-factor spacing and the validator zones stay
    honest; the result is for structural checks only.
    """
    _check_nk(n, k, m)
    if not isinstance(scale, int) or scale < 1:
        raise ParameterError(f"demo scale must be a positive integer, got {scale!r}")
    b, p = 4 * k + 16, 4 * n + 3
    s = scale
    return ReductionPlan(
        n, k, m, b, p, wasteland1=s + 2, gates1=s, sel_gap_gates=(p - 3) // 2,
        sel_tail_gates=s, mid_gates=s, zone_len=4 * n + 3, val_tail_gates=s, gates3=s,
        wasteland3=s + 1, thread_tail=s, filler1=s, filler2=s, demo=True)


@dataclass(frozen=True)
class CensusEntry:
    sector: str
    item: str
    count: int
    vertices_each: int

    @property
    def vertices(self) -> int:
        return self.count * self.vertices_each


def census(plan: ReductionPlan) -> list[CensusEntry]:
    """Every gadget, path stretch and leaf group of the instance, by sector.

    Gadget entries count only the vertices a gadget adds beside its host
    path (from :class:`GadgetSpec`), so the census sum is the vertex total.
    """
    n, k, b = plan.n, plan.k, plan.b
    wall = GadgetSpec("wall", b)
    gate = GadgetSpec("gate", b, k)
    gate1 = GadgetSpec("gate", b, k + 1)
    hole = GadgetSpec("hole", b, k + 1)
    knot = GadgetSpec("knot", b, k + 1)
    out = []
    for name, lo, hi in plan.sector_bounds():
        out.append(CensusEntry(name, "main path", 1, hi - lo + 1))
    out += [
        CensusEntry("first wall", "wall", 1, wall.extra_vertices),
        CensusEntry("first gateland", f"gate({k})", plan.gates1, gate.extra_vertices),
        CensusEntry("selector", f"hole({k + 1})", n, hole.extra_vertices),
        CensusEntry("selector", f"gate({k + 1})",
                    (n - 1) * plan.sel_gap_gates + plan.sel_tail_gates, gate1.extra_vertices),
        CensusEntry("middle gateland", f"gate({k})", plan.mid_gates, gate.extra_vertices),
        CensusEntry("validator", f"hole({k + 1})", n, hole.extra_vertices),
        CensusEntry("validator", f"gate({k + 1})", plan.val_tail_gates, gate1.extra_vertices),
        CensusEntry("last gateland", f"gate({k})", plan.gates3, gate.extra_vertices),
        CensusEntry("last wall", "wall", 1, wall.extra_vertices),
        CensusEntry("threads", "thread path", k, plan.thread_vertices),
        CensusEntry("threads", f"knot({k + 1})", k * (n + 1), knot.extra_vertices),
        CensusEntry("threads", "non-neighbour leaf", k * (n * n - n - 2 * plan.m), 1),
        CensusEntry("fillers", "filler path", 1, plan.filler1),
        CensusEntry("fillers", "filler path", 1, plan.filler2),
    ]
    return out


def census_by_sector(entries) -> dict[str, int]:
    totals = Counter()
    for e in entries:
        totals[e.sector] += e.vertices
    return {s: totals[s] for s in SECTORS}


@dataclass(frozen=True)
class ReductionSizes:
    n: int
    k: int
    m: int
    b: int
    p: int
    m1: int
    m2: int
    m3: int
    main_path: int
    thread_length: int
    filler1: int
    filler2: int
    sectors: dict
    total: int
    census: tuple = field(repr=False)
    notes: tuple = ()

    @property
    def census_total(self) -> int:
        return sum(e.vertices for e in self.census)

    def as_json(self) -> dict:
        return {
            "n": self.n, "k": self.k, "m": self.m, "b": self.b, "p": self.p,
            "m1": self.m1, "m2": self.m2, "m3": self.m3, "main_path": self.main_path,
            "thread_length": self.thread_length, "filler1": self.filler1,
            "filler2": self.filler2, "sectors": self.sectors, "total": self.total,
            "census": [{"sector": e.sector, "item": e.item, "count": e.count,
                        "vertices_each": e.vertices_each} for e in self.census],
            "census_total": self.census_total, "notes": list(self.notes),
        }


NOTES = (
    "knots and holes are (k+1)-gadgets: their leaf counts 3b/2-(k+1)-1 and "
    "3b/4-(k+1)-1 equal the 3b/2-k-2 and 3b/4-k-2 used by the filler lengths",
    "m is read as the edge count of the source graph",
    "a wall's path neighbour is one of its 2b leaves, like a gate's in/out",
)


def reduction_sizes(n: int, k: int, m: int) -> ReductionSizes:
    """Exact sizes for the source instance ``(G, k)`` with ``|V(G)| = n``, ``|E(G)| = m``.

    Sector totals come from closed forms; the census is enumerated
    separately from the segment plan.  The two are compared.
    """
    _check_nk(n, k, m)
    b, p = 4 * k + 16, 4 * n + 3
    m1 = p * n * k + 2
    m2 = (2 * b + 1) * m1 + (2 * b + 1) * (p * (n - 1) + 3)
    m3 = (2 * b + 1) * m2 + (2 * b + 1) * (2 * n - 1) * (4 * n + 3)
    main = b * b * (2 * b + 1) * m3 + 1
    f1, f2 = _fillers(n, k, m, b, p)
    gate_k = 2 * (b - k - 1)
    gate_k1 = 2 * (b - k - 2)
    hole = 2 * (3 * b // 4 - k - 2)
    knot = 3 * b // 2 - k - 2
    thread = ((2 * b + 1) * m2 + (n - 1) * (4 * n + 3) + n * (4 * n + 3) - 1
              + b * (2 * b + 1) * m3 - 2)
    sectors = {
        "first wall": 1 + (2 * b - 1),
        "first wasteland": m1 - 2,
        "first gateland": 2 * b * m1 + b * m1 * gate_k,
        "selector": ((2 * b + 1) * (p * (n - 1) + 3)
                     + ((n - 1) * (p - 3) // 2 + b * (p * (n - 1) + 3)) * gate_k1 + n * hole),
        "middle gateland": 2 * b * m2 + b * m2 * gate_k,
        "validator": ((2 * b + 1) * (2 * n - 1) * (4 * n + 3)
                      + b * (2 * n - 1) * (4 * n + 3) * gate_k1 + n * hole),
        "last gateland": 2 * b * m3 + b * m3 * gate_k,
        "last wasteland": main - (2 * b + 1) * m3,
        "last wall": 1 + (2 * b - 1),
        "threads": k * (thread + (n + 1) * knot + n * n - n - 2 * m),
        "fillers": f1 + f2,
    }
    total = sum(sectors.values())
    plan = honest_plan(n, k, m)
    entries = tuple(census(plan))
    sizes = ReductionSizes(n, k, m, b, p, m1, m2, m3, main, thread, f1, f2, sectors, total,
                           entries, NOTES)
    assert plan.length == main and plan.m2 == m2 and plan.m3 == m3
    by_sector = census_by_sector(entries)
    diff = {s: (by_sector[s], sectors[s]) for s in sectors if by_sector[s] != sectors[s]}
    assert not diff, f"census disagrees with the closed forms: {diff}"
    return sizes


# --------------------------------------------------------------------------
# materialisation


@dataclass
class ReductionInstance:
    tree: Tree
    plan: ReductionPlan
    census: list
    sector: list          # sector name of every vertex
    role: list            # role of every vertex
    main_path: list       # vertex ids u_1 .. u_L
    threads: list         # vertex ids t_2 .. t_last for every thread
    attachments: set      # main-path vertices where threads or fillers hang

    @property
    def demo(self) -> bool:
        return self.plan.demo


def _source_edges(n, edges):
    adj = set()
    for e in edges:
        u, v = (int(x) for x in e)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParameterError(f"edge ({u}, {v}) references a vertex outside 1..{n}")
        if u == v:
            raise ParameterError(f"self-loop at vertex {u}")
        if (u, v) in adj:
            raise ParameterError(f"edge ({u}, {v}) listed twice")
        adj.add((u, v))
        adj.add((v, u))
    return adj


def materialize_reduction(n: int, k: int, edges, vertex_budget: int = 10 ** 6,
                          demo_scale: int | None = None) -> ReductionInstance:
    """Build the reduction tree for the source graph on vertices ``1..n``.

    Without ``demo_scale`` the honest instance is built when its size fits in
    ``vertex_budget``; otherwise :class:`TooLargeError` carries the total.
    With ``demo_scale`` the long stretches are shortened (see
    :func:`demo_plan`); such instances carry no bandwidth guarantee.
    """
    adj_g = _source_edges(n, edges)
    m = len(adj_g) // 2
    if demo_scale is None:
        sizes = reduction_sizes(n, k, m)
        if sizes.total > vertex_budget:
            raise TooLargeError(
                f"honest instance has {sizes.total} vertices, budget is {vertex_budget}",
                sizes.total)
        plan = honest_plan(n, k, m)
    else:
        plan = demo_plan(n, k, m, demo_scale)
    entries = census(plan)
    planned = sum(e.vertices for e in entries)
    if planned > vertex_budget:
        raise TooLargeError(f"instance has {planned} vertices, budget is {vertex_budget}", planned)

    b = plan.b
    edges_t: list[tuple[int, int]] = []
    sector: list[str] = []
    role: list[str] = []

    def new(sec, rl):
        sector.append(sec)
        role.append(rl)
        return len(sector) - 1

    bounds = plan.sector_bounds()
    main = [None]   # 1-based
    for name, lo, hi in bounds:
        for _ in range(lo, hi + 1):
            main.append(new(name, "path"))
    for a, c in zip(main[1:], main[2:]):
        edges_t.append((a, c))

    def leaves(host, count, sec):
        for _ in range(count):
            edges_t.append((host, new(sec, "leaf")))

    def sector_of(i):
        return sector[main[i]]

    def wall(i):
        role[main[i]] = "wall center"
        leaves(main[i], GadgetSpec("wall", b).extra_vertices, sector_of(i))

    def gates(start, count, kk):
        extra = GadgetSpec("gate", b, kk).extra_vertices
        for g in range(count):
            c = start + 2 * g + 1
            role[main[c]] = f"gate({kk}) center"
            leaves(main[c], extra, sector_of(c))
        return start + 2 * count

    def hole(start, kk):
        each = GadgetSpec("hole", b, kk).leaf_counts["in_center"]
        for c in (start + 1, start + 2):
            role[main[c]] = f"hole({kk}) center"
            leaves(main[c], each, sector_of(c))
        return start + 3

    k = plan.k
    wall(1)
    gates(plan.wasteland1, plan.gates1, k)
    at = plan.sel_start
    for i in range(n):
        at = hole(at, k + 1)
        if i < n - 1:
            at = gates(at, plan.sel_gap_gates, k + 1)
    assert at == plan.sel_holes_end
    gates(at, plan.sel_tail_gates, k + 1)
    gates(plan.m2, plan.mid_gates, k)
    zone_end = plan.validation_zone + plan.zone_len
    at = zone_end - 3 * n
    for _ in range(n):
        at = hole(at, k + 1)
    assert at == zone_end
    gates(plan.val_start + (2 * n - 1) * plan.zone_len, plan.val_tail_gates, k + 1)
    gates(plan.m3, plan.gates3, k)
    wall(plan.length)

    knot_leaves = GadgetSpec("knot", b, k + 1).leaf_counts["center"]
    threads = []
    for _ in range(k):
        t = [None, None, main[2]]    # t[i] is thread vertex t_i
        for _ in range(3, plan.thread_last + 1):
            v = new("threads", "thread")
            edges_t.append((t[-1], v))
            t.append(v)
        role[t[plan.knot_index]] = f"knot({k + 1}) center"
        leaves(t[plan.knot_index], knot_leaves, "threads")
        for i in range(n):
            base = plan.block_start + i * plan.block_len + n + 3
            for j in range(n):
                mid = t[base + 3 * j + 1]
                if i == j:
                    role[mid] = f"knot({k + 1}) center"
                    leaves(mid, knot_leaves, "threads")
                elif (i + 1, j + 1) not in adj_g:
                    role[mid] = "danglement"
                    leaves(mid, 1, "threads")
        threads.append(t[2:])

    attachments = {main[2], main[plan.sel_start], main[plan.val_start]}
    for host, length in ((plan.sel_start, plan.filler1), (plan.val_start, plan.filler2)):
        prev = main[host]
        for _ in range(length):
            v = new("fillers", "filler")
            edges_t.append((prev, v))
            prev = v

    tree = Tree.from_edges(edges_t, n=len(sector))
    inst = ReductionInstance(tree, plan, entries, sector, role, main[1:], threads, attachments)
    validate_reduction(inst)
    return inst


def validate_reduction(inst: ReductionInstance, check_pathwidth: bool = True) -> None:
    """Structural checks: census, sector order, branch vertices, pathwidth."""
    t = inst.tree        # constructing Tree already verified tree-ness
    got = Counter(inst.sector)
    want = census_by_sector(inst.census)
    for s in SECTORS:
        if got[s] != want[s]:
            raise AssertionError(f"sector {s!r}: built {got[s]} vertices, census says {want[s]}")
    order = [SECTORS.index(inst.sector[v]) for v in inst.main_path]
    if order != sorted(order):
        raise AssertionError("main-path sectors are out of order")
    for v in range(t.n):
        if t.degree(v) >= 3 and not (inst.role[v].endswith("center") or v in inst.attachments
                                     or inst.role[v] == "danglement"):
            raise AssertionError(f"vertex {v} ({inst.role[v]}) has degree {t.degree(v)}")
    if check_pathwidth:
        for s in SECTORS:
            verts = [v for v in range(t.n) if inst.sector[v] == s]
            for comp in _components(t, set(verts)):
                sub, _ = t.subtree(comp)
                if pathwidth(sub) > 2:
                    raise AssertionError(f"sector {s!r} has a fragment of pathwidth above 2")


def _components(t, verts):
    left = set(verts)
    while left:
        start = left.pop()
        comp = [start]
        for u in comp:
            for w in t.adj[u]:
                if w in left:
                    left.remove(w)
                    comp.append(w)
        yield comp
