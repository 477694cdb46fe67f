"""
Divisors, critical groups and Riemann-Hurwitz
=============================================

Push and pull divisors along the wheel-to-triangle map and watch the genus
bookkeeping balance.
"""

from arithgraph import (
    analyze_harmonic,
    build_morphism,
    canonical_divisor,
    critical_group,
    cycle_graph,
    genus_data,
    induced_pullback,
    induced_pushforward,
    is_principal,
    make_divisor,
    pullback_divisor,
    pullback_structure,
    ramification_divisor,
    validate_structure,
    verify_injective,
    verify_surjective,
    wheel_graph,
)
from arithgraph.critical import group_label

triangle, wheel = cycle_graph(3), wheel_graph(5)
h = analyze_harmonic(build_morphism(wheel, triangle, [0, 1, 1, 2, 2]))
st1 = validate_structure(triangle, (2, 1, 3), (2, 5, 1))
st2 = pullback_structure(h, st1)

###############################################################################
# A principal divisor and its pullback
# ------------------------------------
xi = make_divisor(triangle, (-4, 5, 1))
print("witness on the triangle:", is_principal(xi, st1))
lifted = pullback_divisor(h, xi)
print("pulled back divisor:", lifted.values, "witness:", is_principal(lifted, st2))

###############################################################################
# Critical groups and the induced maps
# ------------------------------------
k1, k2 = critical_group(st1), critical_group(st2)
print("K1 =", group_label(k1), " K2 =", group_label(k2))
print("pushforward onto:", verify_surjective(induced_pushforward(h, k2, k1)))
print("pullback one-to-one:", verify_injective(induced_pullback(h, k1, k2)))

###############################################################################
# Riemann-Hurwitz
# ---------------
g1, g2 = genus_data(st1), genus_data(st2)
ram = ramification_divisor(h).values
print("K2 =", canonical_divisor(st2).values, " Ram =", ram)
rhs = h.degree * g1.deg_k + sum(r * x for r, x in zip(st2.r, ram))
print(f"2g2 - 2 = {g2.deg_k}  vs  deg * (2g1 - 2) + sum R2 Ram = {rhs}")
print(f"g1 = {g1.genus}, g2 = {g2.genus}")
