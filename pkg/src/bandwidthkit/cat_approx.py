"""The 48b^3 approximation for caterpillar bandwidth.

Pipeline: maximized backbone, comb-depth labelling of strays, one oriented
interval per stray, an optimal interval colouring, and a sparse layout whose
residue classes keep backbone and stray vertices apart.  All arithmetic is in
integers; fractional window tests are scaled by ``2b``.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .decomposition import CaterpillarView, Stray, caterpillar_view
from .errors import ParameterError
from .graph_core import Tree, bandwidth_of_layout, compress

WEST = "west"
EAST = "east"


def _check_b(b) -> int:
    if isinstance(b, bool) or not isinstance(b, int) or b < 1:
        raise ParameterError(f"b must be a positive integer, got {b!r}")
    return b


def _in_x(p: Stray, q: Stray, b: int) -> bool:
    s = 2 * b
    return s * p.pos + p.length < s * q.pos and s * q.pos - q.length <= s * p.pos - p.length


def _in_y(p: Stray, q: Stray, b: int) -> bool:
    s = 2 * b
    return s * q.pos < s * p.pos - p.length and s * p.pos + p.length <= s * q.pos + q.length


def neighbor_sets(view: CaterpillarView, b: int, q: Stray) -> tuple[list[int], list[int]]:
    """Ids of the strays in the west window ``X_Q`` and east window ``Y_Q`` of ``q``."""
    _check_b(b)
    xs = [p.id for p in view.strays if p.id != q.id and _in_x(p, q, b)]
    ys = [p.id for p in view.strays if p.id != q.id and _in_y(p, q, b)]
    return xs, ys


@dataclass
class SccResult:
    """Outcome of the comb-depth labelling.

    ``depth[i]`` is the depth of stray ``i``.  ``deep_comb`` is the id of a
    stray whose depth reached ``b + 1`` (certifying ``bw > b``), else None.
    ``log`` holds ``(stray, new depth, x, y)`` for every increment.
    """

    depth: list[int]
    b: int
    deep_comb: int | None = None
    increments: int = 0
    log: list = field(default_factory=list)
    windows: list = field(default_factory=list, repr=False)

    def xy(self, i: int) -> tuple[int, int]:
        xs, ys = self.windows[i]
        x = max((self.depth[j] for j in xs), default=0)
        y = max((self.depth[j] for j in ys), default=0)
        return x, y

    def orientation(self, i: int) -> str:
        x, y = self.xy(i)
        return WEST if x < y else EAST

    def classification(self, i: int) -> str:
        x, y = self.xy(i)
        if x > y:
            return "pushed-east"
        if x < y:
            return "pushed-west"
        return "lifted"


def find_scc(view: CaterpillarView, b: int) -> SccResult:
    """Label strays with the depth of the nested comb centred on them.

    Strays are scanned by ascending ``(pos, id)`` and the scan restarts after
    every increment; the first lifted stray with ``x = y >= depth`` (depth at
    least 2) is incremented.  Stops at a fixpoint or when a depth reaches
    ``b + 1``.
    """
    _check_b(b)
    strays = view.strays
    windows = [neighbor_sets(view, b, q) for q in strays]
    depth = [2 if q.length >= 4 * b else 0 for q in strays]
    res = SccResult(depth, b, windows=windows)
    for i, d in enumerate(depth):
        if d >= b + 1:
            res.deep_comb = i
            return res

    # strays whose window contains i must be re-examined when i changes
    watchers = [[] for _ in strays]
    for i, (xs, ys) in enumerate(windows):
        for j in xs + ys:
            watchers[j].append(i)

    def eligible(i):
        if depth[i] < 2:
            return False
        x, y = res.xy(i)
        return x == y and x >= depth[i]

    # stray ids already follow ascending (pos, first vertex)
    ready = {i for i in range(len(strays)) if eligible(i)}
    limit = (b - 1) * len(strays)
    while ready:
        i = min(ready)
        x, y = res.xy(i)
        depth[i] += 1
        assert x == y >= depth[i] - 1, "increment without a witnessing comb"
        res.increments += 1
        res.log.append((i, depth[i], x, y))
        assert res.increments <= limit, "depth labelling exceeded its increment bound"
        if depth[i] >= b + 1:
            res.deep_comb = i
            return res
        for j in [i, *watchers[i]]:
            if eligible(j):
                ready.add(j)
            else:
                ready.discard(j)
    return res


@dataclass(frozen=True)
class StrayInterval:
    stray: int
    lo: int
    hi: int
    orientation: str


def directional_stray_graph(view: CaterpillarView, scc: SccResult, b: int) -> list[StrayInterval]:
    """One closed interval per stray, west or east of its attachment point."""
    _check_b(b)
    big = 48 * b ** 3
    step = 12 * b * b
    out = []
    for q in view.strays:
        at = q.pos * big
        if scc.orientation(q.id) == WEST:
            out.append(StrayInterval(q.id, at - step * q.length, at, WEST))
        else:
            out.append(StrayInterval(q.id, at, at + step * q.length, EAST))
    return out


def color_intervals(intervals) -> tuple[dict, int]:
    """Optimal colouring of closed intervals; colours are ``1..chi``.

    Accepts :class:`StrayInterval` objects or ``(key, lo, hi)`` triples.
    Returns ``(colour by key, chi)``.
    """
    items = []
    for iv in intervals:
        if isinstance(iv, StrayInterval):
            items.append((iv.lo, iv.hi, iv.stray))
        else:
            key, lo, hi = iv
            items.append((lo, hi, key))
    items.sort(key=lambda t: (t[0], t[1], repr(t[2])))
    active = []      # (hi, colour)
    free = []        # released colours
    colour = {}
    chi = 0
    for lo, hi, key in items:
        while active and active[0][0] < lo:
            _, c = heapq.heappop(active)
            heapq.heappush(free, c)
        if free:
            c = heapq.heappop(free)
        else:
            chi += 1
            c = chi
        colour[key] = c
        heapq.heappush(active, (hi, c))
    return colour, chi


@dataclass
class CatResult:
    b: int
    layout: list[int] | None
    sparse: list[int] | None
    chi: int | None
    scc: SccResult
    intervals: list
    view: CaterpillarView
    reason: str = ""

    @property
    def accepted(self) -> bool:
        return self.layout is not None

    @property
    def bound(self) -> int:
        return 48 * self.b ** 3


def cat_alg(t: Tree, b: int) -> CatResult:
    """Layout of bandwidth at most ``48 b^3``, or a certificate that ``bw(t) > b``."""
    _check_b(b)
    view = caterpillar_view(t)
    scc = find_scc(view, b)
    intervals = directional_stray_graph(view, scc, b)
    if scc.deep_comb is not None:
        q = view.strays[scc.deep_comb]
        reason = (f"comb of depth {scc.depth[q.id]} centred on the stray at backbone "
                  f"position {q.pos} (length {q.length}); bandwidth exceeds {b}")
        return CatResult(b, None, None, None, scc, intervals, view, reason)
    colour, chi = color_intervals(intervals)
    step = 12 * b * b
    if chi >= step:
        reason = f"stray interval graph needs {chi} colours >= 12b^2 = {step}; bandwidth exceeds {b}"
        return CatResult(b, None, None, chi, scc, intervals, view, reason)

    big = 48 * b ** 3
    alpha = [0] * t.n
    for i, v in enumerate(view.backbone, start=1):
        alpha[v] = big * (t.n + i)
    for iv in intervals:
        q = view.strays[iv.stray]
        base = alpha[view.attachment(q)] + colour[iv.stray]
        for i, v in enumerate(q.vertices, start=1):
            alpha[v] = base - i * step if iv.orientation == WEST else base + (i - 1) * step
    assert len(set(alpha)) == t.n, "sparse layout is not injective"
    layout = compress(t, alpha)
    assert bandwidth_of_layout(t, layout) <= big, "layout exceeds 48b^3"
    return CatResult(b, layout, alpha, chi, scc, intervals, view)
