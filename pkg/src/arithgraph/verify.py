"""Theorem checks for harmonic morphisms between arithmetical graphs.

Each ``check_*`` recomputes both sides of an identity straight from the raw
data (vertex map, multiplicities, ``R`` and ``S``) instead of reusing the
library routines it is meant to cross-examine, and returns a
:class:`TheoremReport`.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .arith import ArithStructure, enumerate_structures
from .critical import (
    DEFAULT_BOUND,
    critical_group,
    induced_pullback,
    induced_pushforward,
    verify_injective,
    verify_surjective,
)
from .graph import Graph
from .morphism import (
    HarmonicData,
    enumerate_harmonic_morphisms,
    pullback_structure,
    require_nonconstant,
)

RELATIONS = {
    "=": lambda a, b: a == b,
    ">=": lambda a, b: a >= b,
    "divides": lambda a, b: b % a == 0,
}


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    instance_summary: str
    lhs: object
    rhs: object
    relation: str = "="

    @property
    def verdict(self) -> str:
        return "pass" if RELATIONS[self.relation](self.lhs, self.rhs) else "fail"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "instance": self.instance_summary,
            "lhs": _stringify(self.lhs),
            "relation": self.relation,
            "rhs": _stringify(self.rhs),
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _stringify(x):
    if isinstance(x, bool):
        return x
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, (tuple, list)):
        return [_stringify(y) for y in x]
    return str(x)


def _summary(h: HarmonicData, st1: ArithStructure) -> str:
    g2, g1 = h.domain, h.codomain
    vm = ",".join(g1.labels[x] for x in h.vertex_map)
    return f"phi=[{vm}] n2={g2.n} n1={g1.n} R1={list(st1.r)} S1={list(st1.s)}"


def _raw_pullback(h: HarmonicData, st1: ArithStructure):
    vm = h.vertex_map
    r2 = [st1.r[x] for x in vm]
    s2 = [h.mu[v] * st1.s[x] + h.nu[v] for v, x in enumerate(vm)]
    return r2, s2


def _raw_degree(h: HarmonicData) -> int:
    a, b = h.codomain.edges[0]
    vm = h.vertex_map
    return sum(1 for i, j in h.domain.edges if {vm[i], vm[j]} == {a, b})


def check_riemann_hurwitz(h: HarmonicData, st1: ArithStructure) -> TheoremReport:
    """``2 g2 - 2 == deg(phi) (2 g1 - 2) + sum R2 (2 mu - 2 + nu)``."""
    require_nonconstant(h)
    r2, s2 = _raw_pullback(h, st1)
    lhs = sum(r * (s - 2) for r, s in zip(r2, s2))
    ram = sum(r * (2 * m - 2 + n) for r, m, n in zip(r2, h.mu, h.nu))
    rhs = _raw_degree(h) * sum(r * (s - 2) for r, s in zip(st1.r, st1.s)) + ram
    return TheoremReport("riemann-hurwitz", _summary(h, st1), lhs, rhs)


def check_canonical_ram_identity(h: HarmonicData, st1: ArithStructure) -> TheoremReport:
    require_nonconstant(h)
    _, s2 = _raw_pullback(h, st1)
    lhs = tuple(s - 2 for s in s2)
    rhs = tuple(
        h.mu[v] * (st1.s[x] - 2) + 2 * h.mu[v] - 2 + h.nu[v] for v, x in enumerate(h.vertex_map)
    )
    return TheoremReport("canonical-ramification", _summary(h, st1), lhs, rhs)


def check_genus_inequality(h: HarmonicData, st1: ArithStructure) -> TheoremReport:
    require_nonconstant(h)
    r2, s2 = _raw_pullback(h, st1)
    g2 = Fraction(sum(r * (s - 2) for r, s in zip(r2, s2)) + 2, 2)
    g1 = Fraction(sum(r * (s - 2) for r, s in zip(st1.r, st1.s)) + 2, 2)
    return TheoremReport("genus-inequality", _summary(h, st1), g2, g1, ">=")


def check_order_divisibility(h: HarmonicData, st1: ArithStructure) -> TheoremReport:
    require_nonconstant(h)
    k1 = critical_group(st1)
    k2 = critical_group(pullback_structure(h, st1))
    return TheoremReport("order-divisibility", _summary(h, st1), k1.order, k2.order, "divides")


def check_s_deg_lemma(st: ArithStructure) -> TheoremReport:
    """``sum R S == sum R deg``."""
    g = st.graph
    lhs = sum(r * s for r, s in zip(st.r, st.s))
    rhs = sum(st.r[v] * len(g.neighbors[v]) for v in range(g.n))
    summary = f"n={g.n} R={list(st.r)} S={list(st.s)}"
    return TheoremReport("s-degree", summary, lhs, rhs)


def check_laplacian_intertwining(h: HarmonicData, st1: ArithStructure) -> TheoremReport:
    """``L2 Phi == D_mu Phi L1``, entrywise from adjacency lists."""
    require_nonconstant(h)
    g2, g1 = h.domain, h.codomain
    _, s2 = _raw_pullback(h, st1)
    vm = h.vertex_map
    lhs, rhs = [], []
    for v in range(g2.n):
        row_l, row_r = [], []
        for x in range(g1.n):
            # (L2 Phi)[v, x] = s2[v] [phi(v) = x] - #{w ~ v : phi(w) = x}
            row_l.append(s2[v] * (vm[v] == x) - sum(1 for w in g2.neighbors[v] if vm[w] == x))
            y = vm[v]
            l1 = st1.s[y] if y == x else -int(g1.has_edge(y, x))
            row_r.append(h.mu[v] * l1)
        lhs.append(tuple(row_l))
        rhs.append(tuple(row_r))
    return TheoremReport("laplacian-intertwining", _summary(h, st1), tuple(lhs), tuple(rhs))


def check_pushforward_surjective(
    h: HarmonicData, st1: ArithStructure, bound: int = DEFAULT_BOUND
) -> TheoremReport:
    k1 = critical_group(st1)
    k2 = critical_group(pullback_structure(h, st1))
    verdict = verify_surjective(induced_pushforward(h, k2, k1), bound)
    summary = f"{_summary(h, st1)} |K2|={k2.order} ({verdict.method})"
    return TheoremReport("pushforward-surjective", summary, verdict.image_order, k1.order)


def check_pullback_injective(
    h: HarmonicData, st1: ArithStructure, bound: int = DEFAULT_BOUND
) -> TheoremReport:
    k1 = critical_group(st1)
    k2 = critical_group(pullback_structure(h, st1))
    verdict = verify_injective(induced_pullback(h, k1, k2), bound)
    summary = f"{_summary(h, st1)} |K1|={k1.order} ({verdict.method})"
    kernel_order = k1.order // verdict.image_order
    return TheoremReport("pullback-injective", summary, kernel_order, 1)


def check_principal_pullback(
    h: HarmonicData, st1: ArithStructure, seed: int = 0, trials: int = 5
) -> TheoremReport:
    """Pullbacks of random principal divisors are principal, with witness ``Phi g``."""
    require_nonconstant(h)
    rng = random.Random(seed)
    _, s2 = _raw_pullback(h, st1)
    g1, g2 = h.codomain, h.domain
    vm = h.vertex_map
    failures = 0
    for _ in range(trials):
        g = [rng.randint(-9, 9) for _ in range(g1.n)]
        xi = [st1.s[x] * g[x] - sum(g[y] for y in g1.neighbors[x]) for x in range(g1.n)]
        pulled = [h.mu[v] * xi[vm[v]] for v in range(g2.n)]
        f = [g[vm[v]] for v in range(g2.n)]
        lf = [s2[v] * f[v] - sum(f[w] for w in g2.neighbors[v]) for v in range(g2.n)]
        if lf != pulled:
            failures += 1
    summary = f"{_summary(h, st1)} seed={seed} trials={trials}"
    return TheoremReport("principal-pullback", summary, failures, 0)


def all_checks(
    h: HarmonicData, st1: ArithStructure, bound: int = DEFAULT_BOUND, seed: int = 0
) -> list[TheoremReport]:
    st2 = pullback_structure(h, st1)
    return [
        check_laplacian_intertwining(h, st1),
        check_s_deg_lemma(st1),
        check_s_deg_lemma(st2),
        check_canonical_ram_identity(h, st1),
        check_riemann_hurwitz(h, st1),
        check_genus_inequality(h, st1),
        check_order_divisibility(h, st1),
        check_pushforward_surjective(h, st1, bound),
        check_pullback_injective(h, st1, bound),
        check_principal_pullback(h, st1, seed),
    ]


def theorem_sweep(
    pairs: Iterable[tuple[Graph, Graph]],
    max_r: int = 3,
    group_bound: int = DEFAULT_BOUND,
) -> Iterator[TheoremReport]:
    """Run every check over all non-constant harmonic morphisms of each pair and all
    codomain structures with ``R <= max_r``; pairs whose pulled-back group exceeds
    ``group_bound`` are skipped so group checks stay exhaustive."""
    for g2, g1 in pairs:
        morphisms = enumerate_harmonic_morphisms(g2, g1)
        if not morphisms:
            continue
        structures = enumerate_structures(g1, max_r)
        for h in morphisms:
            for st1 in structures:
                st2 = pullback_structure(h, st1)
                if critical_group(st2).order > group_bound:
                    continue
                yield from all_checks(h, st1, group_bound)


@dataclass(frozen=True)
class ObstructionReport:
    domain_max_factors: int
    codomain_max_factors: int
    domain_structures: int
    codomain_structures: int
    codomain_witness: tuple[tuple[int, ...], tuple[int, ...]] | None
    certified: bool
    harmonic_morphisms: int | None

    @property
    def consistent(self) -> bool:
        # a certificate rules out morphisms; the converse is not claimed
        return not (self.certified and self.harmonic_morphisms)

    def to_dict(self) -> dict:
        return {
            "domain_max_invariant_factors": str(self.domain_max_factors),
            "codomain_max_invariant_factors": str(self.codomain_max_factors),
            "domain_structures_examined": str(self.domain_structures),
            "codomain_structures_examined": str(self.codomain_structures),
            "codomain_witness": None
            if self.codomain_witness is None
            else {
                "r": [str(x) for x in self.codomain_witness[0]],
                "s": [str(x) for x in self.codomain_witness[1]],
            },
            "obstruction_certified_within_bound": self.certified,
            "nonconstant_harmonic_morphisms": None
            if self.harmonic_morphisms is None
            else str(self.harmonic_morphisms),
        }


def morphism_obstruction(
    g2: Graph,
    g1: Graph,
    max_r: int,
    max_r_codomain: int | None = None,
    search_limit: int = 10**7,
) -> ObstructionReport:
    """Invariant-factor obstruction to non-constant harmonic morphisms ``g2 -> g1``.

    ``certified`` means the codomain has a structure with more invariant factors
    than any domain structure with ``R <= max_r``; it is a certificate only
    relative to that bound. An uncertified report says nothing about existence.
    When ``n1 ** n2 <= search_limit`` the morphisms are also counted directly.
    """
    dom = [len(critical_group(st).invariant_factors) for st in enumerate_structures(g2, max_r)]
    cod_structs = enumerate_structures(g1, max_r_codomain or max_r)
    best, witness = -1, None
    for st in cod_structs:
        c = len(critical_group(st).invariant_factors)
        if c > best:
            best, witness = c, (st.r, st.s)
    dom_max = max(dom) if dom else 0
    certified = best > dom_max
    found = None
    if g1.n**g2.n <= search_limit:
        found = len(enumerate_harmonic_morphisms(g2, g1))
    return ObstructionReport(dom_max, best, len(dom), len(cod_structs), witness, certified, found)


def has_cyclic_band_ordering(g: Graph) -> bool:
    """True when ``v_i ~ v_{i+2}`` for all ``i`` and ``v_i`` is never adjacent to ``v_j``, ``j > i + 2``.

    Then rows ``0..n-3`` and columns ``2..n-1`` of any Laplacian ``Diag(S) - A``
    form a triangular block with unit determinant, so every critical group on
    ``g`` is cyclic.
    """
    n = g.n
    for i in range(n - 2):
        if not g.has_edge(i, i + 2):
            return False
        if any(g.has_edge(i, j) for j in range(i + 3, n)):
            return False
    return True
