"""Arithmetical structures ``(R, S)`` on graphs and their Laplacians."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import (
    DefiningEquationViolated,
    DimensionMismatch,
    DivisibilityFails,
    GcdNotOne,
    KernelNotPositive,
    NoKernel,
    NonPositiveEntry,
    NotRankDeficientByOne,
)
from .graph import Graph, adjacency_matrix, degree_vector
from .linalg import IntMatrix, IntVector, integer_kernel_primitive, rank


@dataclass(frozen=True)
class ArithStructure:
    graph: Graph
    r: IntVector
    s: IntVector

    @property
    def n(self) -> int:
        return self.graph.n


def _check_length(g: Graph, vec: Sequence[int], name: str) -> IntVector:
    if len(vec) != g.n:
        raise DimensionMismatch(f"{name} has length {len(vec)}, graph has {g.n} vertices")
    return tuple(int(x) for x in vec)


def _check_positive(g: Graph, vec: IntVector, name: str) -> None:
    for i, x in enumerate(vec):
        if x <= 0:
            raise NonPositiveEntry(f"{name}({g.labels[i]}) = {x} is not positive")


def _vector_gcd(vec: Sequence[int]) -> int:
    out = 0
    for x in vec:
        out = gcd(out, x)
    return out


def _neighbor_sums(g: Graph, r: IntVector) -> list[int]:
    return [sum(r[w] for w in g.neighbors[v]) for v in range(g.n)]


def validate_structure(g: Graph, r: Sequence[int], s: Sequence[int]) -> ArithStructure:
    r = _check_length(g, r, "R")
    s = _check_length(g, s, "S")
    _check_positive(g, r, "R")
    _check_positive(g, s, "S")
    if _vector_gcd(r) != 1:
        raise GcdNotOne(f"gcd of R is {_vector_gcd(r)}")
    for v, total in enumerate(_neighbor_sums(g, r)):
        if s[v] * r[v] != total:
            raise DefiningEquationViolated(g.labels[v])
    st = ArithStructure(g, r, s)
    # holds for every genuine structure; checked because it is cheap
    if rank(laplacian(st)) != g.n - 1:
        raise NotRankDeficientByOne("Laplacian rank differs from n - 1")
    return st


def natural_structure(g: Graph) -> ArithStructure:
    return ArithStructure(g, (1,) * g.n, degree_vector(g))


def s_from_r(g: Graph, r: Sequence[int]) -> ArithStructure:
    """The unique ``S`` making ``(R, S)`` arithmetical, if it exists."""
    r = _check_length(g, r, "R")
    _check_positive(g, r, "R")
    if _vector_gcd(r) != 1:
        raise GcdNotOne(f"gcd of R is {_vector_gcd(r)}")
    s = []
    for v, total in enumerate(_neighbor_sums(g, r)):
        q, rem = divmod(total, r[v])
        if rem:
            raise DivisibilityFails(g.labels[v])
        s.append(q)
    return ArithStructure(g, r, tuple(s))


def r_from_s(g: Graph, s: Sequence[int]) -> ArithStructure:
    """Recover ``R`` as the primitive positive kernel vector of ``Diag(S) - A``."""
    s = _check_length(g, s, "S")
    _check_positive(g, s, "S")
    lap = _laplacian(g, s)
    try:
        r = integer_kernel_primitive(lap)
    except NoKernel as exc:
        raise NotRankDeficientByOne("Diag(S) - A has trivial kernel") from exc
    if any(x <= 0 for x in r):
        raise KernelNotPositive(f"primitive kernel vector {r} has non-positive entries")
    return ArithStructure(g, r, s)


def _laplacian(g: Graph, s: Sequence[int]) -> IntMatrix:
    a = adjacency_matrix(g)
    return tuple(
        tuple((s[i] if i == j else 0) - a[i][j] for j in range(g.n)) for i in range(g.n)
    )


def laplacian(st: ArithStructure) -> IntMatrix:
    """``Diag(S) - A``."""
    return _laplacian(st.graph, st.s)


def enumerate_structures(g: Graph, max_r: int) -> list[ArithStructure]:
    """All structures whose R entries are at most ``max_r``, in lexicographic order of R.

    Completeness is only claimed up to the bound.
    """
    if max_r < 1:
        raise ValueError("max_r must be at least 1")
    nbrs = g.neighbors
    out = []
    for r in itertools.product(range(1, max_r + 1), repeat=g.n):
        if any(sum(r[w] for w in nbrs[v]) % r[v] for v in range(g.n)):
            continue
        if _vector_gcd(r) != 1:
            continue
        s = tuple(sum(r[w] for w in nbrs[v]) // r[v] for v in range(g.n))
        out.append(ArithStructure(g, r, s))
    return out
