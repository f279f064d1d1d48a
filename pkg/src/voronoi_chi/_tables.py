"""Raw tables for the four-dimensional catalog.

Everything here is literal data. Vectors are listed one per +/- pair and
referenced by their 1-based position in ``VECTOR_LIST``.
"""

VECTOR_LIST = (
    (0, 0, 0, 1),
    (0, 0, 1, -1),
    (0, 0, 1, 0),
    (0, 0, 1, 1),
    (0, 1, 0, 0),
    (0, 1, 0, 1),
    (0, 1, 1, 0),
    (0, 1, 1, 1),
    (1, -1, 0, 0),
    (1, 0, 0, 0),
    (1, 0, 0, 1),
    (1, 0, 1, 0),
    (1, 0, 1, 1),
    (1, 1, 0, 0),
    (1, 1, 0, 1),
    (1, 1, 1, 0),
    (1, 1, 1, 1),
)

RAY_MATRICES = {
    1: ((1, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0)),
    2: ((0, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0)),
    3: ((0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 0)),
    4: ((0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 1)),
    5: ((1, -1, 0, 0), (-1, 1, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0)),
    6: ((1, 0, -1, 0), (0, 0, 0, 0), (-1, 0, 1, 0), (0, 0, 0, 0)),
    7: ((1, 0, 0, -1), (0, 0, 0, 0), (0, 0, 0, 0), (-1, 0, 0, 1)),
    8: ((0, 0, 0, 0), (0, 1, -1, 0), (0, -1, 1, 0), (0, 0, 0, 0)),
    9: ((0, 0, 0, 0), (0, 1, 0, -1), (0, 0, 0, 0), (0, -1, 0, 1)),
    10: ((0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 1, -1), (0, 0, -1, 1)),
    11: ((4, 2, -2, -2), (2, 4, -2, -2), (-2, -2, 4, 0), (-2, -2, 0, 4)),
    12: ((1, 1, -1, -1), (1, 1, -1, -1), (-1, -1, 1, 1), (-1, -1, 1, 1)),
}

# (symbol, zonotopal, rays, secondary cone dimension, vector indices, graph class)
ENTRIES = (
    # zonotopal
    ("K_5", True, (1, 2, 3, 4, 5, 6, 7, 8, 9, 10), 10,
     (1, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 16, 17), 1),
    ("K_{3,3}", True, (1, 2, 3, 4, 6, 7, 8, 9, 12), 9,
     (1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16, 17), 2),
    ("K_5-1", True, (1, 2, 3, 4, 5, 7, 8, 9, 10), 9,
     (1, 3, 4, 5, 6, 7, 8, 10, 11, 13, 14, 15, 16, 17), 4),
    ("K_5-2", True, (1, 2, 3, 4, 7, 8, 9, 10), 8,
     (1, 3, 4, 5, 6, 7, 8, 10, 11, 13, 15, 17), 8),
    ("K_5-1-1", True, (1, 2, 3, 4, 5, 7, 8, 10), 8,
     (1, 3, 4, 5, 7, 8, 10, 11, 13, 14, 15, 16, 17), 6),
    ("K_5-3", True, (1, 2, 4, 7, 8, 9, 10), 7,
     (1, 3, 4, 5, 7, 8, 10, 11, 13, 17), 11),
    ("K_5-2-1", True, (1, 2, 4, 5, 7, 8, 10), 7,
     (1, 3, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17), 8),
    ("K_4+1", True, (1, 2, 3, 4, 8, 9, 10), 7,
     (1, 3, 4, 5, 6, 7, 8, 10), 12),
    ("C_{2221}", True, (1, 2, 3, 4, 7, 9, 10), 7,
     (1, 3, 4, 5, 6, 8, 10, 11, 13, 15, 17), 10),
    ("C_{221}+1", True, (1, 2, 3, 4, 8, 10), 6,
     (1, 3, 4, 5, 7, 8, 10), 13),
    ("C_{321}", True, (1, 2, 4, 7, 8, 10), 6,
     (1, 3, 4, 5, 7, 8, 10, 11, 13, 17), 11),
    ("C_{222}", True, (1, 2, 3, 7, 9, 10), 6,
     (1, 3, 4, 5, 6, 8, 10, 11, 13, 15, 17), 10),
    ("C_3+C_3", True, (1, 4, 7, 8, 9, 10), 6,
     (3, 5, 7, 8, 10, 17), 14),
    ("C_5", True, (1, 2, 7, 8, 10), 5,
     (1, 3, 4, 5, 7, 8, 10, 11, 13, 17), 11),
    ("C_4+1", True, (1, 2, 4, 8, 10), 5,
     (1, 3, 4, 5, 7, 8, 10), 13),
    ("C_3+1+1", True, (1, 2, 3, 4, 8), 5,
     (1, 3, 5, 7, 10), 15),
    ("1+1+1+1", True, (1, 2, 3, 4), 4,
     (1, 3, 5, 10), 16),
    # non-zonotopal
    ("111+", False, (1, 2, 3, 4, 6, 7, 8, 9, 11, 12), 10,
     (1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16, 17), 2),
    ("111-", False, (1, 2, 3, 4, 6, 7, 8, 9, 10, 11), 10,
     (1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16, 17), 3),
    ("211+", False, (1, 2, 3, 4, 6, 8, 9, 11, 12), 9,
     (1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 16, 17), 5),
    ("211-", False, (1, 2, 3, 4, 6, 8, 9, 10, 11), 9,
     (1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 16, 17), 5),
    ("311+", False, (1, 2, 3, 4, 6, 8, 11, 12), 8,
     (1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 16, 17), 5),
    ("311-", False, (1, 2, 3, 4, 6, 8, 10, 11), 8,
     (1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 16, 17), 5),
    ("221+", False, (1, 2, 3, 4, 8, 9, 11, 12), 8,
     (1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 7),
    ("221-", False, (1, 2, 3, 4, 8, 9, 10, 11), 8,
     (1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 7),
    ("22'1", False, (1, 2, 3, 4, 7, 8, 11, 12), 8,
     (1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 7),
    ("411", False, (1, 2, 4, 6, 8, 10, 11), 7,
     (1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 16, 17), 5),
    ("321+", False, (1, 2, 4, 7, 8, 10, 11), 7,
     (1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 7),
    ("321-", False, (1, 2, 3, 4, 8, 10, 11), 7,
     (1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 7),
    ("222+", False, (1, 3, 4, 8, 9, 11, 12), 7,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
    ("222-", False, (1, 3, 4, 6, 7, 10, 11), 7,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
    ("222'", False, (1, 3, 4, 8, 9, 10, 11), 7,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
    ("22'2''", False, (1, 4, 7, 8, 9, 10, 11), 7,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
    ("421", False, (1, 2, 4, 8, 10, 11), 6,
     (1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 7),
    ("331+", False, (1, 2, 3, 4, 11, 12), 6,
     (1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 7),
    ("331-", False, (1, 2, 3, 4, 10, 11), 6,
     (1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 7),
    ("322+", False, (1, 3, 4, 8, 11, 12), 6,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
    ("322-", False, (1, 4, 7, 8, 11, 12), 6,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
    ("322'", False, (1, 2, 4, 6, 7, 11), 6,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
    ("431", False, (1, 2, 4, 10, 11), 5,
     (1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 7),
    ("422", False, (1, 4, 8, 11, 12), 5,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
    ("422'", False, (1, 4, 8, 10, 11), 5,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
    ("332+", False, (1, 3, 4, 11, 12), 5,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
    ("332-", False, (1, 3, 4, 10, 11), 5,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
    ("441", False, (1, 2, 10, 11), 5,
     (1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 7),
    ("432", False, (1, 4, 10, 11), 4,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
    ("333+", False, (3, 4, 11, 12), 4,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
    ("333-", False, (3, 4, 10, 11), 4,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
    ("442", False, (1, 10, 11), 3,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
    ("433", False, (4, 10, 11), 3,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
    ("443", False, (10, 11), 2,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
    ("444", False, (11,), 1,
     (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 17), 9),
)

# Voronoi graph classes: (id, name, r, |E| of C_1, |Aut C_1|, members,
# representative used for the bounds, chi, torus scale c).
GRAPH_CLASSES = (
    (1, "V30^z", 30, 180, 240, ("K_5",), "K_5", 5, 5),
    (2, "V30^{z,n}", 30, 186, 144, ("K_{3,3}", "111+"), "K_{3,3}", 7, 7),
    (3, "V30^n", 30, 180, 24, ("111-",), "111-", 6, 6),
    (4, "V28^z", 28, 154, 24, ("K_5-1",), "K_5-1", 5, 5),
    (5, "V28^n", 28, 160, 24, ("211+", "211-", "311+", "311-", "411"), "211+", 6, 6),
    (6, "V26^z", 26, 134, 16, ("K_5-1-1",), "K_5-1-1", 5, 5),
    (7, "V26^n", 26, 140, 96,
     ("221+", "221-", "22'1", "321+", "321-", "421", "331+", "331-", "431", "441"),
     "221+", 6, 6),
    (8, "V24^z", 24, 114, 16, ("K_5-2", "K_5-2-1"), "K_5-2-1", 5, 5),
    (9, "V24^n", 24, 120, 1152,
     ("222+", "222-", "222'", "22'2''", "322+", "322-", "322'", "422", "422'",
      "332+", "332-", "432", "333+", "333-", "442", "433", "443", "444"),
     "222+", 4, 4),
    (10, "V22^z", 22, 94, 96, ("C_{2221}", "C_{222}"), "C_{2221}", 4, 4),
    (11, "V20^z", 20, 80, 240, ("K_5-3", "C_{321}", "C_5"), "K_5-3", 5, 5),
    (12, "V16^z", 16, 52, 96, ("K_4+1",), "K_4+1", 4, 4),
    (13, "V14^z", 14, 38, 96, ("C_{221}+1", "C_4+1"), "C_{221}+1", 4, 4),
    (14, "V12^z", 12, 24, 288, ("C_3+C_3",), "C_3+C_3", 3, 3),
    (15, "V10^z", 10, 16, 288, ("C_3+1+1",), "C_3+1+1", 3, 3),
    (16, "V8^z", 8, 8, 40320, ("1+1+1+1",), "1+1+1+1", 2, 2),
)

# Low-dimensional smoke-test lattices: (symbol, gram, chi).
DEMO_LATTICES = (
    ("square", ((1, 0), (0, 1)), 2),
    ("hexagonal", ((2, -1), (-1, 2)), 3),
    ("cube", ((1, 0, 0), (0, 1, 0), (0, 0, 1)), 2),
    ("hexagonal-prism", ((2, -1, 0), (-1, 2, 0), (0, 0, 1)), 3),
    ("rhombic-dodecahedron", ((2, -1, 0), (-1, 2, -1), (0, -1, 2)), 4),
    ("elongated-dodecahedron", ((2, 0, -1), (0, 2, -1), (-1, -1, 3)), 4),
    ("truncated-octahedron", ((3, -1, -1), (-1, 3, -1), (-1, -1, 3)), 4),
)
