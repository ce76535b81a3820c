"""Edge-list and layout text formats.

Edge list::

    n m
    u v        (m lines, whitespace separated labels)

Layout::

    vertex rank   (n lines)

Labels are kept as strings.  A graph file may name at most ``n`` distinct
labels; isolated labels cannot be expressed, so a valid tree file always
mentions every vertex unless ``n == 1`` (then the single line ``1 0`` is
followed by an optional line holding the vertex label).
"""
from __future__ import annotations

import io
from pathlib import Path

from .errors import FormatError, InvalidTreeError
from .graph_core import Tree, check_layout


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def parse_edge_list(text: str) -> Tree:
    lines = _lines(text)
    try:
        no, head = next(lines)
    except StopIteration:
        raise FormatError("empty graph file", 1) from None
    if len(head) != 2:
        raise FormatError("header must be 'n m'", no)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError("header must hold two integers", no) from None
    edges = []
    single = None
    for no, parts in lines:
        if n == 1 and m == 0 and len(parts) == 1 and single is None:
            single = parts[0]
            continue
        if len(parts) != 2:
            raise FormatError(f"expected 'u v', got {' '.join(parts)!r}", no)
        edges.append((parts[0], parts[1]))
        if len(edges) > m:
            raise FormatError(f"more than the declared {m} edges", no)
    if len(edges) != m:
        raise FormatError(f"declared {m} edges but found {len(edges)}")
    if n == 1 and m == 0:
        return Tree(((),), (single if single is not None else "0",))
    try:
        t = Tree.from_labeled_edges(edges)
    except InvalidTreeError as exc:
        raise FormatError(f"not a tree: {exc}") from None
    if t.n != n:
        raise FormatError(f"header declares {n} vertices but edges name {t.n}")
    return t


def read_edge_list(path) -> Tree:
    return parse_edge_list(Path(path).read_text())


def read_layout(path, t: Tree) -> list[int]:
    return parse_layout(Path(path).read_text(), t)


def format_edge_list(t: Tree) -> str:
    out = io.StringIO()
    out.write(f"{t.n} {t.n - 1}\n")
    if t.n == 1:
        out.write(f"{t.labels[0]}\n")
    for u, v in t.edges():
        out.write(f"{t.labels[u]} {t.labels[v]}\n")
    return out.getvalue()


def write_edge_list(t: Tree, path) -> None:
    Path(path).write_text(format_edge_list(t))


def parse_layout(text: str, t: Tree) -> list[int]:
    """Parse a layout for ``t``; labels are matched by their string form."""
    index = {str(lab): v for v, lab in enumerate(t.labels)}
    ranks: dict[int, int] = {}
    for no, parts in _lines(text):
        if len(parts) != 2:
            raise FormatError(f"expected 'vertex rank', got {' '.join(parts)!r}", no)
        lab, r = parts
        if lab not in index:
            raise FormatError(f"unknown vertex {lab!r}", no)
        try:
            rank = int(r)
        except ValueError:
            raise FormatError(f"rank {r!r} is not an integer", no) from None
        v = index[lab]
        if v in ranks:
            raise FormatError(f"vertex {lab!r} listed twice", no)
        ranks[v] = rank
    return check_layout(t, ranks)


def format_layout(t: Tree, layout) -> str:
    order = sorted(range(t.n), key=lambda v: layout[v])
    return "".join(f"{t.labels[v]} {layout[v]}\n" for v in order)


def write_layout(t: Tree, layout, path) -> None:
    Path(path).write_text(format_layout(t, layout))
