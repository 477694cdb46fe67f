"""
A harmonic map from the 5-wheel onto the triangle
=================================================

Fold the rim of the wheel twice around the triangle, send the hub to one
corner, and pull a non-natural arithmetical structure back along the map.
"""

###############################################################################
# Build the two graphs and the vertex map
# ---------------------------------------
from arithgraph import (
    analyze_harmonic,
    build_morphism,
    cycle_graph,
    laplacian,
    pullback_structure,
    validate_structure,
    verify_matrix_identities,
    wheel_graph,
)

triangle = cycle_graph(3)
wheel = wheel_graph(5)
fold = build_morphism(wheel, triangle, {"v0": "x0", "v1": "x1", "v2": "x1", "v3": "x2", "v4": "x2"})
h = analyze_harmonic(fold)
print("mu     =", h.mu)
print("nu     =", h.nu)
print("degree =", h.degree)
print("matrix identities hold:", verify_matrix_identities(h).ok)

###############################################################################
# Pull back a structure
# ---------------------
# R = (2, 1, 3) is an arithmetical structure on the triangle; its S comes
# out as (2, 5, 1).  On the wheel the pulled back S gains the vertical
# multiplicity of every rim vertex.
st1 = validate_structure(triangle, (2, 1, 3), (2, 5, 1))
st2 = pullback_structure(h, st1)
print("R2 =", st2.r, " S2 =", st2.s)
for row in laplacian(st2):
    print(" ".join(f"{x:3d}" for x in row))

###############################################################################
# Same thing with numpy
# ---------------------
# The intertwining identity L2 Phi = D_mu Phi L1 is easy to eyeball as arrays.
import numpy as np

L1 = np.array(laplacian(st1))
L2 = np.array(laplacian(st2))
Phi = np.array(h.phi_matrix)
print(np.array_equal(L2 @ Phi, np.diag(h.mu) @ Phi @ L1))
