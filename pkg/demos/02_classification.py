"""
Fifty-two lattices, sixteen Voronoi graphs
==========================================

Isomorphic Cayley graphs of lattices differ by a unimodular map. We bucket
entries by cheap invariants of the radius-one ball graph and search for
such maps inside each bucket.
"""

from voronoi_chi.iso import classify, find_linear_isomorphism, invariant_signature
from voronoi_chi.qform import catalog, catalog_entry
from voronoi_chi.voronoi import voronoi_of

# Invariants: regularity, |E(C_1)|, |Aut(C_1)|
for symbol in ["K_5", "K_{3,3}", "1+1+1+1"]:
    print(symbol, invariant_signature(voronoi_of(catalog_entry(symbol))).as_tuple())

# 411 and 311+ have different generators but isomorphic graphs.
s, t = voronoi_of(catalog_entry("411")), voronoi_of(catalog_entry("311+"))
amap = find_linear_isomorphism(s, t)
print("411 -> 311+ via")
for row in amap.matrix:
    print("   ", row)

# K_5 and K_{3,3} share r = 30 but no map exists.
print("K_5 ~ K_{3,3}?", find_linear_isomorphism(voronoi_of(catalog_entry("K_5")),
                                               voronoi_of(catalog_entry("K_{3,3}"))))

for c in classify(list(catalog())):
    r, e, a = c.signature.as_tuple()
    print(f"{c.class_id:2d} {c.graph_name:10s} r={r} |E|={e} aut={a} ({len(c.members)})")
