"""Gadgets of the hardness reduction: walls, gates, knots and holes."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParameterError
from ..graph_core import Tree

KINDS = ("wall", "gate", "knot", "hole")


@dataclass(frozen=True)
class GadgetSpec:
    kind: str
    b: int
    k: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"unknown gadget kind {self.kind!r}")
        if not isinstance(self.b, int) or self.b < 1:
            raise ParameterError(f"b must be a positive integer, got {self.b!r}")
        if not isinstance(self.k, int) or self.k < 0:
            raise ParameterError(f"k must be a non-negative integer, got {self.k!r}")
        if self.kind == "gate" and self.b - self.k < 1:
            raise ParameterError("a gate needs b > k so that in and out exist")
        if self.kind in ("knot", "hole"):
            if self.b < 2 * self.k + 14 or self.b % 4:
                raise ParameterError(
                    f"{self.kind} needs b >= 2k + 14 and 4 | b (b={self.b}, k={self.k})")

    @property
    def leaf_counts(self) -> dict[str, int]:
        """Number of leaves hanging off each labelled centre."""
        b, k = self.b, self.k
        if self.kind == "wall":
            return {"center": 2 * b}
        if self.kind == "gate":
            return {"center": 2 * (b - k)}
        if self.kind == "knot":
            return {"center": 3 * b // 2 - k - 1}
        return {"in_center": 3 * b // 4 - k - 1, "out_center": 3 * b // 4 - k - 1}

    @property
    def ports(self) -> tuple[str, ...]:
        return {"wall": ("center",),
                "gate": ("in", "center", "out"),
                "knot": ("first", "center", "last"),
                "hole": ("in", "in_center", "out_center", "out")}[self.kind]

    @property
    def vertex_count(self) -> int:
        if self.kind in ("wall", "gate"):
            return 1 + self.leaf_counts["center"]
        return len(self.ports) + sum(self.leaf_counts.values())

    @property
    def path_vertices(self) -> int:
        """Vertices that sit on the host path when the gadget is embedded.

        A wall's host neighbour and a gate's in/out are among its leaves.
        """
        return {"wall": 2, "gate": 3, "knot": 3, "hole": 4}[self.kind]

    @property
    def extra_vertices(self) -> int:
        return self.vertex_count - self.path_vertices


@dataclass(frozen=True)
class GadgetFragment:
    spec: GadgetSpec
    tree: Tree
    ports: dict


def build_gadget(spec: GadgetSpec) -> GadgetFragment:
    """Stand-alone tree of the gadget with its labelled vertices.

    Ports get the smallest ids in :attr:`GadgetSpec.ports` order; the
    remaining ids are the unlabelled leaves.
    """
    names = list(spec.ports)
    ports = {name: i for i, name in enumerate(names)}
    edges = []
    if spec.kind in ("wall", "gate"):
        c = ports["center"]
        edges += [(c, ports[x]) for x in names if x != "center"]
        spare = spec.leaf_counts["center"] - (len(names) - 1)
        owners = [c] * spare
    else:
        edges += list(zip(range(len(names) - 1), range(1, len(names))))
        owners = [ports[o] for o, cnt in spec.leaf_counts.items() for _ in range(cnt)]
    nxt = len(names)
    for o in owners:
        edges.append((o, nxt))
        nxt += 1
    labels = tuple(names) + tuple(f"leaf{i}" for i in range(nxt - len(names)))
    tree = Tree.from_edges(edges, n=nxt, labels=labels)
    assert tree.n == spec.vertex_count
    return GadgetFragment(spec, tree, ports)
