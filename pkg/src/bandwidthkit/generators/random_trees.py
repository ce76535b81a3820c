"""Seeded random caterpillars and trees of bounded pathwidth."""
from __future__ import annotations

import random
from collections.abc import Sequence

from ..decomposition import pathwidth
from ..errors import ParameterError
from ..graph_core import Tree


def gen_caterpillar(spine_len: int, stray_profile, seed=None) -> Tree:
    """Caterpillar on a spine ``0..spine_len-1`` with strays from a profile.

    ``stray_profile`` is either a sequence with one entry per spine vertex
    (an int length, 0 for none, or a sequence of lengths for several strays),
    or an int ``L``: every spine vertex then gets up to two strays with
    random lengths in ``1..L`` drawn from ``seed``.
    """
    if not isinstance(spine_len, int) or spine_len < 1:
        raise ParameterError(f"spine length must be a positive integer, got {spine_len!r}")
    rng = random.Random(seed)
    if isinstance(stray_profile, int):
        if stray_profile < 0:
            raise ParameterError("maximum stray length must be non-negative")
        profile = [[rng.randint(1, stray_profile) for _ in range(rng.choice((0, 0, 1, 1, 2)))]
                   if stray_profile else [] for _ in range(spine_len)]
    elif isinstance(stray_profile, Sequence):
        if len(stray_profile) != spine_len:
            raise ParameterError(
                f"stray profile has {len(stray_profile)} entries for a spine of {spine_len}")
        profile = [[e] if isinstance(e, int) else list(e) for e in stray_profile]
    else:
        raise ParameterError("stray profile must be an int or a sequence")
    # strays at the spine ends would extend the spine, which is harmless
    edges = [(i, i + 1) for i in range(spine_len - 1)]
    nxt = spine_len
    for i, lengths in enumerate(profile):
        for length in lengths:
            if not isinstance(length, int) or length < 0:
                raise ParameterError(f"invalid stray length {length!r} at spine vertex {i}")
            prev = i
            for _ in range(length):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
    return Tree.from_edges(edges, n=nxt)


def gen_tree_bounded_pw(n: int, p: int, seed=None) -> Tree:
    """Random tree on ``n`` vertices with pathwidth at most ``p``.

    Built recursively: a random path, with random trees of pathwidth at most
    ``p - 1`` hung off it by single edges.  The bound is re-checked.
    """
    if not isinstance(n, int) or n < 1:
        raise ParameterError(f"n must be a positive integer, got {n!r}")
    if not isinstance(p, int) or p < 0:
        raise ParameterError(f"p must be a non-negative integer, got {p!r}")
    if p == 0 and n > 1:
        raise ParameterError("only the single vertex has pathwidth 0")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []

    def build(size, width, base):
        # vertices base..base+size-1; returns nothing, appends edges
        if size == 1:
            return
        if width == 1:
            spine = rng.randint(1, size)
        else:
            spine = rng.randint(1, max(1, size // 2))
        for i in range(spine - 1):
            edges.append((base + i, base + i + 1))
        left = size - spine
        nxt = base + spine
        while left:
            part = 1 if width == 1 else rng.randint(1, left)
            build(part, width - 1, nxt)
            at = base + rng.randrange(spine)
            edges.append((at, nxt + rng.randrange(part)))
            nxt += part
            left -= part

    build(n, p, 0)
    t = Tree.from_edges(edges, n=n)
    assert pathwidth(t) <= p
    return t
