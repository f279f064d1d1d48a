"""
Lower and upper bounds on the hexagonal lattice
===============================================

The ball graph C_1 contains a triangle, so three colors are needed. The
torus A_2 / 3 A_2 (9 vertices, 27 edges) is 3-colorable, and its coloring
repeats periodically over the plane.
"""

from voronoi_chi.graphs import ball_graph, torus_graph
from voronoi_chi.pipeline import generators_of
from voronoi_chi.qform import demo_lattice
from voronoi_chi.sat import chromatic_number_sat, decode_coloring, encode_k_coloring, solve

hexagonal = demo_lattice("hexagonal")
s = generators_of(hexagonal)
print("generators:", s.expanded())

c1 = ball_graph(s, 1)
print("C_1:", c1.vertex_count, "vertices,", c1.edge_count, "edges")
chi, _, unsat_k = chromatic_number_sat(c1, 1, 4)
print("chi(C_1) =", chi, "(refuted at", unsat_k, "colors)")

torus = torus_graph(s, 3)
print("torus:", torus.vertex_count, "vertices,", torus.edge_count, "edges")
out = solve(encode_k_coloring(torus, 3, symmetry_breaking=True))
coloring = decode_coloring(torus.vertex_count, 3, out)

# Print the periodic coloring on a patch of the lattice.
for y in range(5, -1, -1):
    print(" ".join(str(coloring.colors[(x % 3) * 3 + (y % 3)]) for x in range(9)))
