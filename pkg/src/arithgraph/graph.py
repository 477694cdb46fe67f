"""Finite simple connected loopless graphs with a fixed vertex ordering."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    DuplicateEdge,
    DuplicateLabel,
    EmptyEdgeSet,
    LoopEdge,
    TooFewVertices,
    UnknownVertex,
)
from .linalg import IntMatrix, IntVector


@dataclass(frozen=True)
class Graph:
    """Validated graph; ``edges`` holds index pairs ``(i, j)`` with ``i < j``, sorted.

    Build instances with :func:`build_graph` rather than directly.
    """

    labels: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    neighbors: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs = [[] for _ in self.labels]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        object.__setattr__(self, "neighbors", tuple(tuple(sorted(x)) for x in nbrs))

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownVertex(f"no vertex labelled {label!r}") from None

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.neighbors[i]

    def edge_labels(self) -> list[tuple[str, str]]:
        return [(self.labels[i], self.labels[j]) for i, j in self.edges]


def build_graph(labels: Sequence[str], edges: Iterable[Sequence[str]]) -> Graph:
    labels = tuple(str(x) for x in labels)
    seen = set()
    for lab in labels:
        if lab in seen:
            raise DuplicateLabel(f"vertex label {lab!r} repeated")
        seen.add(lab)
    if len(labels) < 2:
        raise TooFewVertices(f"need at least 2 vertices, got {len(labels)}")
    pos = {lab: i for i, lab in enumerate(labels)}
    pairs = set()
    for e in edges:
        a, b = (str(x) for x in e)
        for x in (a, b):
            if x not in pos:
                raise UnknownVertex(f"edge ({a!r}, {b!r}) references unknown vertex {x!r}")
        if a == b:
            raise LoopEdge(f"loop at vertex {a!r}")
        key = tuple(sorted((pos[a], pos[b])))
        if key in pairs:
            raise DuplicateEdge(f"edge ({a!r}, {b!r}) given more than once")
        pairs.add(key)
    if not pairs:
        raise EmptyEdgeSet("graph has no edges")
    g = Graph(labels, tuple(sorted(pairs)))
    reached = _component(g, 0)
    if len(reached) != g.n:
        missing = next(labels[i] for i in range(g.n) if i not in reached)
        raise Disconnected(f"vertex {missing!r} is not reachable from {labels[0]!r}")
    return g


def _component(g: Graph, start: int) -> set[int]:
    stack, seen = [start], {start}
    while stack:
        v = stack.pop()
        for w in g.neighbors[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def adjacency_matrix(g: Graph) -> IntMatrix:
    return tuple(tuple(int(g.has_edge(i, j)) for j in range(g.n)) for i in range(g.n))


def degree_vector(g: Graph) -> IntVector:
    return tuple(len(nb) for nb in g.neighbors)


# Standard families. Wheels and stars put the hub at index 0.

def cycle_graph(n: int, prefix: str = "x") -> Graph:
    labels = [f"{prefix}{i}" for i in range(n)]
    return build_graph(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])


def path_graph(n: int, prefix: str = "v") -> Graph:
    labels = [f"{prefix}{i}" for i in range(n)]
    return build_graph(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])


def star_graph(n: int, prefix: str = "v") -> Graph:
    labels = [f"{prefix}{i}" for i in range(n)]
    return build_graph(labels, [(labels[0], labels[i]) for i in range(1, n)])


def complete_graph(n: int, prefix: str = "x") -> Graph:
    labels = [f"{prefix}{i}" for i in range(n)]
    return build_graph(labels, [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)])


def wheel_graph(n: int, prefix: str = "v") -> Graph:
    """Hub ``v0`` joined to the rim cycle ``v1 .. v{n-1}``."""
    labels = [f"{prefix}{i}" for i in range(n)]
    spokes = [(labels[0], labels[i]) for i in range(1, n)]
    rim = [(labels[i], labels[i % (n - 1) + 1]) for i in range(1, n)]
    return build_graph(labels, spokes + rim)
