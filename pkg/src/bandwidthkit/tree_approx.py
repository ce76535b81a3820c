"""The (768 b^3)^p approximation for trees of pathwidth at most p.

Each level splits the tree into a path plus light hanging components, lays
out the components recursively, lays out the caterpillar obtained by
replacing every component with an equally long pendant path, and finally
threads each folded component layout along the slots of its pendant path.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .cat_approx import cat_alg
from .decomposition import (
    is_caterpillar,
    pathwidth,
    recursive_path_decomposition,
    simplified_instance,
)
from .errors import ParameterError, PreconditionError
from .graph_core import Tree, bandwidth_of_layout, right_fold


@dataclass
class ApproxResult:
    """Outcome of :func:`tree_alg`.

    ``layout`` is None when the run concluded ``bw > b``.  ``ratio_bound`` is
    the nominal ``(768 b^3)^p``; ``certified_bound`` is the sharper bound
    proved for this particular recursion tree.
    """

    b: int
    p: int
    layout: list[int] | None
    ratio_bound: int
    certified_bound: int | None = None
    reason: str = ""
    trace: list = field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return self.layout is not None


def _check_params(p, b):
    for name, val in (("p", p), ("b", b)):
        if isinstance(val, bool) or not isinstance(val, int) or val < 1:
            raise ParameterError(f"{name} must be a positive integer, got {val!r}")


def tree_alg(t: Tree, p: int, b: int, *, tighten_p: bool = False, debug: bool = False,
             _level: int = 0) -> ApproxResult:
    """Layout of bandwidth at most ``(768 b^3)^p`` or the conclusion ``bw(t) > b``.

    With ``tighten_p`` each component recurses with its own pathwidth instead
    of ``p - 1``.  With ``debug`` every edge's stretch is checked against the
    case analysis of the correctness proof.
    """
    _check_params(p, b)
    nominal = (768 * b ** 3) ** p
    labels = [str(x) for x in t.labels]

    if p == 1:
        if not is_caterpillar(t):
            raise PreconditionError("tree has pathwidth greater than 1")
        cat = cat_alg(t, b)
        entry = {"level": _level, "n": t.n, "p": 1, "b": b, "step": "caterpillar",
                 "accepted": cat.accepted}
        if not cat.accepted:
            entry["reason"] = cat.reason
            return ApproxResult(b, p, None, nominal, reason=cat.reason, trace=[entry])
        return ApproxResult(b, p, cat.layout, nominal, 48 * b ** 3, trace=[entry])

    d = recursive_path_decomposition(t, p)
    entry = {"level": _level, "n": t.n, "p": p, "b": b, "step": "decompose",
             "path": [labels[v] for v in d.path], "components": len(d.subtrees)}
    trace = [entry]

    folded = []
    bounds = []
    for comp in d.subtrees:
        sub, old = t.subtree(comp.vertices)
        q = max(1, pathwidth(sub)) if tighten_p else p - 1
        if sub.n == 1:
            res = ApproxResult(b, q, [1], (768 * b ** 3) ** q, 0)
        else:
            res = tree_alg(sub, q, b, tighten_p=tighten_p, debug=debug, _level=_level + 1)
        trace.extend(res.trace)
        if not res.accepted:
            entry["accepted"] = False
            entry["reason"] = res.reason
            return ApproxResult(b, p, None, nominal, reason=res.reason, trace=trace)
        root = old.index(comp.root)
        # the component meets the path in exactly one vertex, its root
        assert [w for w in t.adj[comp.attach[0]] if w in set(comp.vertices)] == [comp.root]
        folded.append((old, right_fold(sub, res.layout, root), sub, res.layout))
        bounds.append(res.certified_bound)

    t_s, pendant = simplified_instance(t, d)
    cat = cat_alg(t_s, 2 * b)
    entry["simplified_accepted"] = cat.accepted
    if not cat.accepted:
        entry["accepted"] = False
        entry["reason"] = "simplified instance: " + cat.reason
        return ApproxResult(b, p, None, nominal, reason=entry["reason"], trace=trace)
    alpha_s = cat.layout

    layout = [0] * t.n
    for v in d.path:
        layout[v] = alpha_s[v]
    for (old, beta, _, _), slots in zip(folded, pendant):
        assert sorted(beta) == list(range(1, len(slots) + 1)), "fold ranks do not match the pendant path"
        for local, rank in enumerate(beta):
            layout[old[local]] = alpha_s[slots[rank - 1]]
    assert sorted(layout) == list(range(1, t.n + 1)), "combined layout is not a bijection"

    spine = 384 * b ** 3
    certified = max([spine] + [768 * b ** 3 * c for c in bounds])
    if debug:
        _check_stretch(t, d, layout, folded, b)
    achieved = bandwidth_of_layout(t, layout)
    assert achieved <= certified <= nominal, "layout exceeds its certified bound"
    entry["accepted"] = True
    entry["bandwidth"] = achieved
    return ApproxResult(b, p, layout, nominal, certified, trace=trace)


def _check_stretch(t, d, layout, folded, b):
    spine = 384 * b ** 3
    owner = {}
    for j, (old, _, _, _) in enumerate(folded):
        for local, v in enumerate(old):
            owner[v] = (j, local)
    for u, v in t.edges():
        stretch = abs(layout[u] - layout[v])
        if u in owner and v in owner:
            j, a = owner[u]
            _, c = owner[v]
            inner = folded[j][3]
            limit = abs(inner[a] - inner[c]) * 768 * b ** 3
            assert stretch <= limit, f"component edge {u}-{v} stretched {stretch} > {limit}"
        else:
            assert stretch <= spine, f"path edge {u}-{v} stretched {stretch} > {spine}"


def search_smallest_b(t: Tree, *, tighten_p: bool = False,
                      log: list | None = None) -> tuple[int, ApproxResult]:
    """Scan ``b`` upward from ``max(1, pw(t))`` and return the first accepted run.

    Every smaller ``b`` was rejected, so ``b_star`` is a certified lower
    bound on the bandwidth.  Each attempt is appended to ``log`` if given.
    """
    p = max(1, pathwidth(t))
    b = p
    while True:
        res = tree_alg(t, p, b, tighten_p=tighten_p)
        if log is not None:
            log.append(res)
        if res.accepted:
            return b, res
        b += 1


def approximate_bandwidth(t: Tree, *, tighten_p: bool = False) -> tuple[int, list[int]]:
    """``(b_star, layout)`` from :func:`search_smallest_b`."""
    b, res = search_smallest_b(t, tighten_p=tighten_p)
    return b, res.layout
