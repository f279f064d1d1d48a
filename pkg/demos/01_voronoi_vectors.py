"""
Strict Voronoi vectors of the 52 four-dimensional types
=======================================================

Every catalog entry is a sum of ray matrices. Its strict Voronoi vectors
are recomputed from the Gram matrix and compared with the stored lists.
"""

from voronoi_chi.qform import build_form, catalog_entry, is_positive_definite
from voronoi_chi.voronoi import strict_voronoi_vectors, verify_catalog_vectors

# The K_5 form: all ten rays of the principal domain.
q = build_form(range(1, 11))
print(q.to_text())
print("positive definite:", is_positive_definite(q))

# One vector per +/- pair; 15 pairs here.
s = strict_voronoi_vectors(q)
print(len(s.expanded()), "strict Voronoi vectors")
for v in s.vectors:
    print("  +/-", v, " Q[v] =", q(v))

# D_4 (the 444 type) has its 24 roots as facet vectors.
print("444:", len(strict_voronoi_vectors(catalog_entry("444").form).expanded()))

# Whole catalog against the stored lists.
report = verify_catalog_vectors()
print(f"{report.match_count}/52 entries match")
