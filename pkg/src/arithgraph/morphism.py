"""Graph morphisms, harmonic morphisms and pullback of arithmetical structures."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .arith import ArithStructure, laplacian, validate_structure
from .errors import (
    ArithGraphError,
    ConstantMorphism,
    GraphMismatch,
    InternalConsistencyError,
    NotAMorphism,
    NotHarmonic,
    UnknownVertex,
)
from .graph import Graph, adjacency_matrix
from .linalg import IntMatrix, IntVector, diag, identity, matadd, matmul, transpose


@dataclass(frozen=True)
class GraphMorphism:
    """Vertex map from ``domain`` to ``codomain``; edge images are implied."""

    domain: Graph
    codomain: Graph
    vertex_map: tuple[int, ...]

    @property
    def is_constant(self) -> bool:
        return len(set(self.vertex_map)) == 1

    def is_vertical(self, i: int, j: int) -> bool:
        return self.vertex_map[i] == self.vertex_map[j]

    def label_map(self) -> dict[str, str]:
        return {
            self.domain.labels[i]: self.codomain.labels[x] for i, x in enumerate(self.vertex_map)
        }


def build_morphism(
    g2: Graph, g1: Graph, vertex_map: Mapping[str, str] | Sequence[int]
) -> GraphMorphism:
    """Validate a vertex map from ``g2`` to ``g1`` given by labels or by indices."""
    if isinstance(vertex_map, Mapping):
        missing = [lab for lab in g2.labels if lab not in vertex_map]
        if missing:
            raise UnknownVertex(f"vertex map is not defined on {missing[0]!r}")
        extra = [lab for lab in vertex_map if lab not in g2.labels]
        if extra:
            raise UnknownVertex(f"vertex map mentions unknown domain vertex {extra[0]!r}")
        idx = tuple(g1.index(vertex_map[lab]) for lab in g2.labels)
    else:
        idx = tuple(int(x) for x in vertex_map)
        if len(idx) != g2.n or any(not 0 <= x < g1.n for x in idx):
            raise UnknownVertex("index vertex map has the wrong length or range")
    for i, j in g2.edges:
        x, y = idx[i], idx[j]
        if x != y and not g1.has_edge(x, y):
            raise NotAMorphism((g2.labels[i], g2.labels[j]))
    return GraphMorphism(g2, g1, idx)


@dataclass(frozen=True)
class HarmonicData:
    morphism: GraphMorphism
    mu: IntVector
    nu: IntVector
    degree: int
    phi_matrix: IntMatrix
    constant: bool

    @property
    def domain(self) -> Graph:
        return self.morphism.domain

    @property
    def codomain(self) -> Graph:
        return self.morphism.codomain

    @property
    def vertex_map(self) -> tuple[int, ...]:
        return self.morphism.vertex_map


def phi_matrix(m: GraphMorphism) -> IntMatrix:
    """0/1 matrix with a single 1 per row, at column ``phi(v)``."""
    n1 = m.codomain.n
    return tuple(tuple(int(x == y) for y in range(n1)) for x in m.vertex_map)


def local_multiplicities(m: GraphMorphism, v: int) -> dict[int, int]:
    """For each neighbour ``y`` of ``phi(v)``, the number of edges at ``v`` mapping onto ``(phi(v), y)``."""
    x = m.vertex_map[v]
    counts = {y: 0 for y in m.codomain.neighbors[x]}
    for w in m.domain.neighbors[v]:
        y = m.vertex_map[w]
        if y != x:
            counts[y] += 1
    return counts


def vertical_multiplicities(m: GraphMorphism) -> IntVector:
    vm = m.vertex_map
    return tuple(sum(1 for w in nb if vm[w] == vm[v]) for v, nb in enumerate(m.domain.neighbors))


def analyze_harmonic(m: GraphMorphism) -> HarmonicData:
    """Compute multiplicities and degree, raising :class:`NotHarmonic` on failure.

    Constant maps come back with ``constant=True``, ``mu = 0`` and degree 0.
    """
    g2, g1 = m.domain, m.codomain
    mu = []
    for v in range(g2.n):
        counts = local_multiplicities(m, v)
        values = sorted(counts.items())
        (y0, c0) = values[0]
        for y, c in values[1:]:
            if c != c0:
                x = m.vertex_map[v]
                raise NotHarmonic(
                    g2.labels[v],
                    (g1.labels[x], g1.labels[y0]),
                    (g1.labels[x], g1.labels[y]),
                    (c0, c),
                )
        mu.append(c0)
    nu = vertical_multiplicities(m)
    constant = m.is_constant
    degree = 0
    if not constant:
        preimages = {e: 0 for e in g1.edges}
        for i, j in g2.edges:
            x, y = m.vertex_map[i], m.vertex_map[j]
            if x != y:
                preimages[(min(x, y), max(x, y))] += 1
        degree = preimages[g1.edges[0]]
        if any(c != degree for c in preimages.values()):
            raise InternalConsistencyError(f"edge preimage counts not uniform: {preimages}")
    return HarmonicData(m, tuple(mu), nu, degree, phi_matrix(m), constant)


@dataclass(frozen=True)
class IdentityReport:
    adjacency_identity: bool
    degree_identity: bool
    first_mismatch: str | None = None

    @property
    def ok(self) -> bool:
        return self.adjacency_identity and self.degree_identity


def _first_difference(name: str, a: IntMatrix, b: IntMatrix) -> str | None:
    for i, (ra, rb) in enumerate(zip(a, b)):
        for j, (x, y) in enumerate(zip(ra, rb)):
            if x != y:
                return f"{name}[{i}][{j}]: {x} != {y}"
    return None


def verify_matrix_identities(h: HarmonicData) -> IdentityReport:
    """Recheck ``A2 Phi == D_nu Phi + D_mu Phi A1`` and ``Phi^t D_mu Phi == deg * I``."""
    require_nonconstant(h)
    a1 = adjacency_matrix(h.codomain)
    a2 = adjacency_matrix(h.domain)
    phi = h.phi_matrix
    d_mu = diag(h.mu)
    lhs = matmul(a2, phi)
    rhs = matadd(matmul(diag(h.nu), phi), matmul(matmul(d_mu, phi), a1))
    adj_diff = _first_difference("A2*Phi", lhs, rhs)
    lhs2 = matmul(matmul(transpose(phi), d_mu), phi)
    rhs2 = tuple(tuple(h.degree * x for x in row) for row in identity(h.codomain.n))
    deg_diff = _first_difference("Phi^t*Dmu*Phi", lhs2, rhs2)
    return IdentityReport(adj_diff is None, deg_diff is None, adj_diff or deg_diff)


def require_nonconstant(h: HarmonicData) -> None:
    if h.constant:
        raise ConstantMorphism("operation undefined for constant morphisms")


def _search(g2: Graph, g1: Graph, harmonic_only: bool) -> Iterator[tuple[int, ...]]:
    n2, n1 = g2.n, g1.n
    earlier = [[w for w in g2.neighbors[v] if w < v] for v in range(n2)]
    # vertices whose closed neighbourhood is fully assigned once index k is placed
    closes_at = [[] for _ in range(n2)]
    for v in range(n2):
        closes_at[max([v, *g2.neighbors[v]])].append(v)
    nb1 = [set(x) for x in g1.neighbors]
    assign = [0] * n2

    def harmonic_at(v):
        x = assign[v]
        counts = {y: 0 for y in nb1[x]}
        for w in g2.neighbors[v]:
            y = assign[w]
            if y != x:
                counts[y] += 1
        return len(set(counts.values())) == 1

    def rec(k):
        if k == n2:
            yield tuple(assign)
            return
        for x in range(n1):
            if any(assign[w] != x and assign[w] not in nb1[x] for w in earlier[k]):
                continue
            assign[k] = x
            if harmonic_only and not all(harmonic_at(v) for v in closes_at[k]):
                continue
            yield from rec(k + 1)

    yield from rec(0)


def enumerate_graph_morphisms(g2: Graph, g1: Graph) -> Iterator[GraphMorphism]:
    """Every graph morphism ``g2 -> g1``, lexicographic in the vertex-map array."""
    for vm in _search(g2, g1, harmonic_only=False):
        yield GraphMorphism(g2, g1, vm)


def enumerate_harmonic_morphisms(
    g2: Graph, g1: Graph, include_constant: bool = False
) -> list[HarmonicData]:
    out = []
    for vm in _search(g2, g1, harmonic_only=True):
        m = build_morphism(g2, g1, vm)
        if m.is_constant and not include_constant:
            continue
        out.append(analyze_harmonic(m))
    return out


def pullback_structure(h: HarmonicData, st1: ArithStructure) -> ArithStructure:
    """``R2 = R1 o phi`` and ``S2 = mu * (S1 o phi) + nu``."""
    require_nonconstant(h)
    if st1.graph != h.codomain:
        raise GraphMismatch("structure does not live on the morphism's codomain")
    vm = h.vertex_map
    r2 = tuple(st1.r[x] for x in vm)
    s2 = tuple(h.mu[v] * st1.s[x] + h.nu[v] for v, x in enumerate(vm))
    try:
        st2 = validate_structure(h.domain, r2, s2)
    except ArithGraphError as exc:
        raise InternalConsistencyError(f"pullback is not an arithmetical structure: {exc}") from exc
    lhs = matmul(laplacian(st2), h.phi_matrix)
    rhs = matmul(matmul(diag(h.mu), h.phi_matrix), laplacian(st1))
    if lhs != rhs:
        raise InternalConsistencyError(_first_difference("L2*Phi", lhs, rhs))
    return st2
