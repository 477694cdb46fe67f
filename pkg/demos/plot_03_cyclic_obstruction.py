"""
Ruling out maps with invariant-factor counts
============================================

A graph whose critical groups are all cyclic cannot map harmonically onto a
graph carrying a structure with two invariant factors.  The check below is
only a certificate up to the chosen bound on R.
"""

from arithgraph import build_graph, critical_group, enumerate_structures, star_graph
from arithgraph.critical import group_label
from arithgraph.verify import has_cyclic_band_ordering, morphism_obstruction

labels = [f"v{i}" for i in range(1, 9)]
edges = [
    ("v1", "v2"), ("v1", "v3"), ("v2", "v4"), ("v3", "v4"), ("v3", "v5"), ("v4", "v5"),
    ("v4", "v6"), ("v5", "v6"), ("v5", "v7"), ("v6", "v8"), ("v7", "v8"),
]
band = build_graph(labels, edges)
print("band ordering present:", has_cyclic_band_ordering(band))

###############################################################################
# Which stars have non-cyclic groups?
# -----------------------------------
for n in (4, 5):
    labels_seen = sorted({group_label(critical_group(st)) for st in enumerate_structures(star_graph(n), 6)})
    print(f"Star{n}:", ", ".join(labels_seen))

###############################################################################
# The obstruction report
# ----------------------
rep = morphism_obstruction(band, star_graph(5), max_r=3, max_r_codomain=6)
for key, value in rep.to_dict().items():
    print(f"{key:40s} {value}")
