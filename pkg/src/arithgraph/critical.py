"""Critical groups, divisor classes and induced homomorphisms.

Classes are stored in Smith coordinates: for ``U L V = D`` the class of a
degree-0 divisor ``d`` is ``(U d)`` read at the non-unit diagonal positions,
reduced modulo the corresponding invariant factor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import prod

import numpy as np

from .arith import ArithStructure, laplacian
from .divisor import Divisor, divisor_degree, divisor_of_function, pullback_divisor, pushforward
from .errors import (
    DimensionMismatch,
    InternalConsistencyError,
    NonzeroDegree,
    StructureMismatch,
)
from .linalg import (
    IntMatrix,
    SnfDecomposition,
    diag,
    inverse_unimodular,
    matmul,
    matvec,
    smith_normal_form,
    transpose,
)
from .morphism import HarmonicData, pullback_structure, require_nonconstant

DEFAULT_BOUND = 10_000


@dataclass(frozen=True)
class CriticalGroup:
    structure: ArithStructure
    snf: SnfDecomposition
    invariant_factors: tuple[int, ...]
    torsion_indices: tuple[int, ...]
    free_row: int
    u_inverse: IntMatrix = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def graph(self):
        return self.structure.graph

    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * len(self.invariant_factors))

    def elements(self):
        """Iterate over every element (coordinate tuples in lexicographic order)."""
        for coords in itertools.product(*(range(e) for e in self.invariant_factors)):
            yield GroupElement(self, coords)


@dataclass(frozen=True)
class GroupElement:
    group: CriticalGroup = field(repr=False)
    coords: tuple[int, ...]

    def __post_init__(self):
        factors = self.group.invariant_factors
        if len(self.coords) != len(factors):
            raise DimensionMismatch("coordinate tuple has the wrong length")
        object.__setattr__(
            self, "coords", tuple(int(c) % e for c, e in zip(self.coords, factors))
        )

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    @property
    def is_identity(self) -> bool:
        return not any(self.coords)


def critical_group(st: ArithStructure) -> CriticalGroup:
    snf = smith_normal_form(laplacian(st))
    dg = snf.diagonal
    zero_positions = [i for i, x in enumerate(dg) if x == 0]
    if len(zero_positions) != 1:
        raise InternalConsistencyError(f"Laplacian SNF diagonal {dg} does not have exactly one zero")
    free_row = zero_positions[0]
    torsion = tuple(i for i, x in enumerate(dg) if x > 1)
    u_inv = inverse_unimodular(snf.u)
    row = snf.u[free_row]
    if row != st.r and row != tuple(-x for x in st.r):
        raise InternalConsistencyError("free row of U is not +-R")
    return CriticalGroup(st, snf, tuple(dg[i] for i in torsion), torsion, free_row, u_inv)


def invariant_factor_count(k: CriticalGroup) -> int:
    return len(k.invariant_factors)


def class_of(d: Divisor, k: CriticalGroup) -> GroupElement:
    deg = divisor_degree(d, k.structure)
    if deg != 0:
        raise NonzeroDegree(f"divisor has degree {deg}")
    ud = matvec(k.snf.u, d.values)
    return GroupElement(k, tuple(ud[i] for i in k.torsion_indices))


def class_representative(e: GroupElement) -> Divisor:
    """A degree-0 divisor in the class ``e`` (lift with free coordinate 0)."""
    k = e.group
    y = [0] * k.structure.n
    for i, c in zip(k.torsion_indices, e.coords):
        y[i] = c
    return Divisor(k.graph, matvec(k.u_inverse, y))


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism in Smith coordinates; ``matrix`` is target-rank x source-rank."""

    source: CriticalGroup
    target: CriticalGroup
    matrix: IntMatrix

    def __call__(self, e: GroupElement) -> GroupElement:
        if e.group is not self.source and e.group != self.source:
            raise DimensionMismatch("element does not belong to the source group")
        img = matvec(self.matrix, e.coords) if self.matrix else ()
        return GroupElement(self.target, img)


def _hom_from_divisor_map(source: CriticalGroup, target: CriticalGroup, fn) -> GroupHom:
    ns = len(source.invariant_factors)
    cols = []
    for i in range(ns):
        unit = tuple(int(j == i) for j in range(ns))
        rep = class_representative(GroupElement(source, unit))
        image = class_of(fn(rep), target)
        cols.append(image.coords)
        # same class, different representatives: images must agree
        for v in range(source.structure.n):
            f = tuple(int(w == v) for w in range(source.structure.n))
            other = rep + divisor_of_function(f, source.structure)
            if class_of(fn(other), target) != image:
                raise InternalConsistencyError("induced map is not well defined on classes")
    nt = len(target.invariant_factors)
    if ns == 0:
        matrix = tuple(() for _ in range(nt))
    else:
        matrix = transpose(tuple(cols))
    return GroupHom(source, target, matrix)


def _check_pullback_pair(h: HarmonicData, k2: CriticalGroup, k1: CriticalGroup) -> None:
    require_nonconstant(h)
    if k1.graph != h.codomain or k2.graph != h.domain:
        raise StructureMismatch("groups do not live on the morphism's domain and codomain")
    if pullback_structure(h, k1.structure) != k2.structure:
        raise StructureMismatch("domain structure is not the pullback of the codomain structure")


def induced_pushforward(h: HarmonicData, k2: CriticalGroup, k1: CriticalGroup) -> GroupHom:
    """Class of ``d`` maps to class of the fibre-sum of ``d``."""
    _check_pullback_pair(h, k2, k1)
    st1, st2 = k1.structure, k2.structure
    phi_t = transpose(h.phi_matrix)
    l1, l2 = laplacian(st1), laplacian(st2)
    # Phi^t L2 f == L1 Phi^t D_mu f, i.e. principal divisors push forward to principal ones
    lhs = matmul(phi_t, l2)
    rhs = matmul(matmul(l1, phi_t), diag(h.mu))
    if lhs != rhs:
        raise InternalConsistencyError("Phi^t L2 != L1 Phi^t D_mu")
    return _hom_from_divisor_map(k2, k1, lambda d: pushforward(h, d))


def induced_pullback(h: HarmonicData, k1: CriticalGroup, k2: CriticalGroup) -> GroupHom:
    """Class of ``xi`` maps to class of ``D_mu Phi xi``."""
    _check_pullback_pair(h, k2, k1)
    return _hom_from_divisor_map(k1, k2, lambda d: pullback_divisor(h, d))


@dataclass(frozen=True)
class Verdict:
    holds: bool
    method: str  # "enumerated" or "computed"
    image_order: int


def _image_order_enumerated(hom: GroupHom) -> tuple[int, int]:
    """(number of distinct images, number of source elements mapping to 0) by brute force."""
    src = hom.source.invariant_factors
    tgt = hom.target.invariant_factors
    if not tgt:
        return 1, hom.source.order
    if not src:
        return 1, 1
    h = np.array(hom.matrix, dtype=object) % np.array(tgt, dtype=object)[:, None]
    bound = max(src) * max(tgt) * len(src)
    dtype = np.int64 if bound < 2**62 else object
    grid = np.indices(src, dtype=np.int64).reshape(len(src), -1).astype(dtype)
    img = (h.astype(dtype) @ grid) % np.array(tgt, dtype=dtype)[:, None]
    cols = {tuple(int(x) for x in c) for c in img.T}
    zeros = int(np.sum(~np.any(img != 0, axis=0)))
    return len(cols), zeros


def _image_order_computed(hom: GroupHom) -> int:
    """|image| = prod(target factors) / prod(SNF diagonal of [H | diag(target)])."""
    tgt = hom.target.invariant_factors
    if not tgt:
        return 1
    rows = [
        list(r) + [e if i == j else 0 for j in range(len(tgt))]
        for i, (r, e) in enumerate(zip(hom.matrix, tgt))
    ]
    dg = smith_normal_form(rows).diagonal
    return prod(tgt) // prod(dg)


def verify_surjective(hom: GroupHom, bound: int = DEFAULT_BOUND) -> Verdict:
    if hom.source.order <= bound:
        size, _ = _image_order_enumerated(hom)
        return Verdict(size == hom.target.order, "enumerated", size)
    size = _image_order_computed(hom)
    return Verdict(size == hom.target.order, "computed", size)


def verify_injective(hom: GroupHom, bound: int = DEFAULT_BOUND) -> Verdict:
    if hom.source.order <= bound:
        size, zeros = _image_order_enumerated(hom)
        return Verdict(zeros == 1, "enumerated", size)
    size = _image_order_computed(hom)
    return Verdict(size == hom.source.order, "computed", size)


def group_label(k: CriticalGroup) -> str:
    return " x ".join(f"Z/{e}" for e in k.invariant_factors) or "0"
