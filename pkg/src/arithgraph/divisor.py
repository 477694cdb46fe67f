"""Divisors on graphs carrying an arithmetical structure."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import ArithStructure, laplacian
from .errors import DimensionMismatch, GraphMismatch, NoSolution, NotPrincipal
from .graph import Graph
from .linalg import IntVector, matvec, solve_integer
from .morphism import HarmonicData, require_nonconstant


@dataclass(frozen=True)
class Divisor:
    graph: Graph
    values: IntVector

    def __post_init__(self):
        if len(self.values) != self.graph.n:
            raise DimensionMismatch(
                f"divisor has {len(self.values)} values, graph has {self.graph.n} vertices"
            )

    def __add__(self, other: "Divisor") -> "Divisor":
        _same_graph(self.graph, other.graph)
        return Divisor(self.graph, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "Divisor") -> "Divisor":
        _same_graph(self.graph, other.graph)
        return Divisor(self.graph, tuple(a - b for a, b in zip(self.values, other.values)))


def make_divisor(g: Graph, values: Sequence[int]) -> Divisor:
    return Divisor(g, tuple(int(x) for x in values))


def _same_graph(a: Graph, b: Graph) -> None:
    if a != b:
        raise GraphMismatch("objects live on different graphs")


def divisor_degree(d: Divisor, st: ArithStructure) -> int:
    _same_graph(d.graph, st.graph)
    return sum(x * r for x, r in zip(d.values, st.r))


def divisor_of_function(f: Sequence[int], st: ArithStructure) -> Divisor:
    """``L f``."""
    if len(f) != st.n:
        raise DimensionMismatch(f"function has {len(f)} values, graph has {st.n} vertices")
    return Divisor(st.graph, matvec(laplacian(st), tuple(int(x) for x in f)))


def is_principal(d: Divisor, st: ArithStructure) -> IntVector:
    """Return an integer ``f`` with ``L f == d`` or raise :class:`NotPrincipal`.

    Witnesses are unique only up to adding multiples of R.
    """
    _same_graph(d.graph, st.graph)
    try:
        return solve_integer(laplacian(st), d.values)
    except NoSolution as exc:
        raise NotPrincipal(str(exc)) from exc


def pushforward(h: HarmonicData, d: Divisor) -> Divisor:
    """Sum of ``d`` over each fibre."""
    _same_graph(d.graph, h.domain)
    out = [0] * h.codomain.n
    for v, x in enumerate(h.vertex_map):
        out[x] += d.values[v]
    return Divisor(h.codomain, tuple(out))


def pullback_divisor(h: HarmonicData, xi: Divisor) -> Divisor:
    require_nonconstant(h)
    _same_graph(xi.graph, h.codomain)
    return Divisor(h.domain, tuple(h.mu[v] * xi.values[x] for v, x in enumerate(h.vertex_map)))


def canonical_divisor(st: ArithStructure) -> Divisor:
    return Divisor(st.graph, tuple(s - 2 for s in st.s))


def ramification_divisor(h: HarmonicData) -> Divisor:
    require_nonconstant(h)
    return Divisor(h.domain, tuple(2 * m - 2 + n for m, n in zip(h.mu, h.nu)))


@dataclass(frozen=True)
class GenusData:
    deg_k: int
    genus: Fraction

    @property
    def integral(self) -> bool:
        return self.genus.denominator == 1


def genus_data(st: ArithStructure) -> GenusData:
    """Degree of the canonical divisor and the genus ``(deg K + 2) / 2``.

    The genus is kept as a fraction; ``integral`` flags whether it is whole.
    """
    deg_k = divisor_degree(canonical_divisor(st), st)
    return GenusData(deg_k, Fraction(deg_k + 2, 2))
