import json
import random

import pytest

from arithgraph.arith import enumerate_structures, laplacian, natural_structure, validate_structure
from arithgraph.critical import critical_group
from arithgraph.errors import ConstantMorphism
from arithgraph.graph import cycle_graph, star_graph, wheel_graph
from arithgraph.linalg import determinant
from arithgraph.morphism import analyze_harmonic, build_morphism
from arithgraph.verify import (
    TheoremReport,
    all_checks,
    check_canonical_ram_identity,
    check_genus_inequality,
    check_order_divisibility,
    check_riemann_hurwitz,
    check_s_deg_lemma,
    has_cyclic_band_ordering,
    morphism_obstruction,
    theorem_sweep,
)
from conftest import identity_morphism


def test_riemann_hurwitz_worked(phi, R1S1):
    rep = check_riemann_hurwitz(phi, R1S1)
    assert (rep.lhs, rep.rhs, rep.verdict) == (12, 12, "pass")


def test_canonical_ram_worked(phi, R1S1):
    rep = check_canonical_ram_identity(phi, R1S1)
    assert rep.lhs == rep.rhs == (2, 4, 4, 0, 0)
    assert rep.passed


def test_genus_inequality_worked(phi, R1S1):
    rep = check_genus_inequality(phi, R1S1)
    assert (rep.lhs, rep.rhs, rep.relation) == (7, 1, ">=")
    assert rep.passed


def test_order_divisibility_worked(ws, psi):
    rep = check_order_divisibility(psi, ws.structure("K4_a").structure)
    assert (rep.lhs, rep.rhs) == (12, 192) and rep.passed
    h = analyze_harmonic(ws.morphism("psi_prime").morphism)
    rep = check_order_divisibility(h, ws.structure("K4_b").structure)
    assert (rep.lhs, rep.rhs) == (12, 1920) and rep.passed


def test_s_deg_worked(R1S1, W7):
    rep = check_s_deg_lemma(R1S1)
    assert rep.lhs == rep.rhs == 12
    nat = check_s_deg_lemma(natural_structure(W7))
    assert nat.lhs == nat.rhs == 2 * len(W7.edges)


@pytest.mark.parametrize("g", [cycle_graph(4), wheel_graph(5), star_graph(4)])
def test_identity_morphism_checks(g):
    h = identity_morphism(g)
    for st in enumerate_structures(g, 3):
        reps = all_checks(h, st)
        assert all(r.passed for r in reps)
        rh = check_riemann_hurwitz(h, st)
        k = sum(r * (s - 2) for r, s in zip(st.r, st.s))
        assert rh.lhs == rh.rhs == k


def test_constant_rejected(C3, R1S1):
    h = analyze_harmonic(build_morphism(cycle_graph(4), C3, [0, 0, 0, 0]))
    for check in (check_riemann_hurwitz, check_canonical_ram_identity, check_genus_inequality, check_order_divisibility):
        with pytest.raises(ConstantMorphism):
            check(h, R1S1)


def test_report_failures_and_json():
    bad = TheoremReport("riemann-hurwitz", "made up", 3, 4)
    assert bad.verdict == "fail" and not bad.passed
    assert not TheoremReport("order-divisibility", "x", 5, 12, "divides").passed
    assert not TheoremReport("genus-inequality", "x", 1, 2, ">=").passed
    doc = json.loads(TheoremReport("s-degree", "x", (1, 2), (1, 2)).to_json())
    assert doc == {
        "theorem": "s-degree",
        "instance": "x",
        "lhs": ["1", "2"],
        "relation": "=",
        "rhs": ["1", "2"],
        "verdict": "pass",
    }


def test_all_checks_worked(phi, R1S1):
    reps = all_checks(phi, R1S1, seed=5)
    assert len(reps) == 10
    assert all(r.passed for r in reps), [r.to_dict() for r in reps if not r.passed]


def test_small_sweep():
    reps = list(theorem_sweep([(wheel_graph(5), cycle_graph(3)), (cycle_graph(6), cycle_graph(3))]))
    assert reps and all(r.passed for r in reps)


def test_sweep_skips_large_groups(ws):
    pairs = [(ws.graph("W7"), ws.graph("K4"))]
    assert list(theorem_sweep(pairs, max_r=1, group_bound=100)) == []


def test_band8_obstruction(ws, band8):
    rep = morphism_obstruction(band8, star_graph(5), max_r=3, max_r_codomain=6)
    assert rep.domain_max_factors <= 1
    assert rep.codomain_max_factors == 2
    assert rep.certified
    assert rep.harmonic_morphisms == 0
    assert rep.consistent
    witness = validate_structure(star_graph(5), *rep.codomain_witness)
    assert len(critical_group(witness).invariant_factors) == 2


def test_self_obstruction_never_certified():
    for g in (cycle_graph(4), star_graph(4), wheel_graph(5)):
        rep = morphism_obstruction(g, g, max_r=3)
        assert not rep.certified
        assert rep.harmonic_morphisms >= 1


def test_star4_cyclic():
    for st in enumerate_structures(star_graph(4), 6):
        assert len(critical_group(st).invariant_factors) <= 1


def test_band8_band_submatrix(band8):
    assert has_cyclic_band_ordering(band8)
    assert not has_cyclic_band_ordering(wheel_graph(7))
    rng = random.Random(11)
    nat = natural_structure(band8)
    for _ in range(25):
        s = [rng.randint(-50, 50) for _ in range(band8.n)]
        lap = laplacian(type(nat)(band8, nat.r, tuple(s)))
        block = [row[2:] for row in lap[:6]]
        # strictly upper part vanishes: entry (i, j) of the block is L[i][j + 2]
        assert all(block[i][j] == 0 for i in range(6) for j in range(6) if j > i)
        assert abs(determinant(block)) == 1
