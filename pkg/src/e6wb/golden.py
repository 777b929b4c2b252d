"""Reference values, stored as data so regressions show up as mismatches.

Signatures are ``(compact, noncompact)``.  Atom names follow
``<r|b><1|23>,<H|⊥>``.
"""

BASIS = {"dimension": 78, "rotations": 52, "boosts": 26}

# involution -> (dim plus, signature plus, dim minus, (rotations, boosts) of minus)
INVOLUTIONS = {
    "s": (52, (52, 0), 26, (0, 26)),
    "t": (46, (36, 10), 32, (16, 16)),
    "H": (38, (24, 14), 40, (28, 12)),
}

# h / h⊥ against t1 / t23
INTERSECTIONS = {
    "h1": (22, (16, 6)),
    "h23": (16, (8, 8)),
    "h⊥1": (24, (20, 4)),
    "h⊥23": (16, (8, 8)),
}

SPLIT_HS = {"rH": 24, "r⊥": 28, "bH": 14, "b⊥": 12}
SPLIT_TS = {"r1": 36, "r23": 16, "b1": 10, "b23": 16}

ATOMS = {
    "r1,H": 16, "r23,H": 8, "r1,⊥": 20, "r23,⊥": 8,
    "b1,H": 6, "b23,H": 8, "b1,⊥": 4, "b23,⊥": 8,
}

# rows and columns in the order h1, h23, h⊥1, h⊥23
COMM_TH = [
    ["h1", "h23", "h⊥1", "h⊥23"],
    ["h23", "h1", "h⊥23", "h⊥1"],
    ["h⊥1", "h⊥23", "h1", "h23"],
    ["h⊥23", "h⊥1", "h23", "h1"],
]

# every atom brackets with itself into this one
ATOM_SQUARE = "r1,H"

# map -> (image, fixed subalgebra, preimage of the maximal compact part)
MAPS = {
    "1": ((52, 26), (52, 26), (52, 0)),
    "s": ((78, 0), (52, 0), (52, 26)),
    "t": ((52, 26), (36, 10), (36, 16)),
    "H": ((36, 42), (24, 14), (24, 12)),
    "ts": ((46, 32), (36, 16), (36, 10)),
    "Hs": ((38, 40), (24, 12), (24, 14)),
    "tH": ((36, 42), (24, 14), (24, 12)),
    "tHs": ((38, 40), (24, 12), (24, 14)),
}
MAP_NAMES = {
    "1": ("sl(3,O)", "su(3,O)"),
    "s": ("su(3,O)", "sl(3,O)"),
    "t": ("sl(2,O)⊕u(-1)", "su(2,1,O)"),
    "H": ("sl(3,H)⊕su(2)_H", "su(3,1,H)_1"),
    "ts": ("su(2,1,O)", "sl(2,O)⊕u(-1)"),
    "Hs": ("su(3,1,H)_1", "sl(3,H)⊕su(2)_H"),
    "tH": ("sl(2,1,H)⊕su(2)_2", "su(3,1,H)_2"),
    "tHs": ("su(3,1,H)_2", "sl(2,1,H)⊕su(2)_2"),
}

ORBIT_SIGNATURES = sorted([(78, 0), (52, 26), (52, 26), (46, 32), (38, 40), (38, 40), (36, 42), (36, 42)])
ORBIT_COMPACT_DIMS = sorted([78, 52, 46, 38, 52, 36, 38, 36])
REAL_FORMS_OF_E6 = 5

# name, atoms, total signature, signatures of the simple and central pieces
CATALOG = [
    ("su(2,H)⊕su(2)_H⊕su(2)", ["r1,H"], (16, 0), [(10, 0), (3, 0), (3, 0)]),
    ("su(3,H)_2⊕su(2)_H", ["r1,H", "r23,⊥"], (24, 0), [(21, 0), (3, 0)]),
    ("sl(2,H)⊕su(2)_H⊕su(2)⊕u(-1)", ["r1,H", "b1,H"], (16, 6), [(10, 5), (3, 0), (3, 0), (0, 1)]),
    ("su(2,1,H)_1⊕su(2)_H", ["r1,H", "b23,⊥"], (16, 8), [(13, 8), (3, 0)]),
    ("su(2,1,H)_2⊕su(2)_H", ["r1,H", "b23,H"], (16, 8), [(13, 8), (3, 0)]),
    ("su(3,H)⊕su(2)_H", ["r1,H", "r23,H"], (24, 0), [(21, 0), (3, 0)]),
    ("so(5)⊕so(4,1)", ["r1,H", "b1,⊥"], (16, 4), [(10, 0), (6, 4)]),
    ("so(9)", ["r1,H", "r1,⊥"], (36, 0), [(36, 0)]),
    ("sl(3,H)⊕su(2)_H", ["r1,H", "b1,H", "b23,H", "r23,H"], (24, 14), [(21, 14), (3, 0)]),
    ("sl(2,1,H)_1⊕su(2)_2", ["r1,H", "b1,H", "r23,⊥", "b23,⊥"], (24, 14), [(21, 14), (3, 0)]),
    ("sl(2,O)⊕u(-1)", ["r1,H", "b1,H", "b1,⊥", "r1,⊥"], (36, 10), [(36, 9), (0, 1)]),
    ("su(3,1,H)_1", ["r1,H", "b23,⊥", "r23,H", "b1,⊥"], (24, 12), [(24, 12)]),
    ("su(3,1,H)_2", ["r1,H", "r23,⊥", "b23,H", "b1,⊥"], (24, 12), [(24, 12)]),
    ("su(3,O)", ["r1,H", "r23,⊥", "r23,H", "r1,⊥"], (52, 0), [(52, 0)]),
    ("su(2,1,O)", ["r1,H", "b23,⊥", "b23,H", "r1,⊥"], (36, 16), [(36, 16)]),
]

# complex types read off the identifications
CATALOG_TYPES = {
    "su(2,H)⊕su(2)_H⊕su(2)": "c2⊕a1⊕a1",
    "su(3,H)_2⊕su(2)_H": "c3⊕a1",
    "sl(2,H)⊕su(2)_H⊕su(2)⊕u(-1)": "a3⊕a1⊕a1⊕u1",
    "su(2,1,H)_1⊕su(2)_H": "c3⊕a1",
    "su(2,1,H)_2⊕su(2)_H": "c3⊕a1",
    "su(3,H)⊕su(2)_H": "c3⊕a1",
    "so(5)⊕so(4,1)": "c2⊕c2",
    "so(9)": "b4",
    "sl(3,H)⊕su(2)_H": "a5⊕a1",
    "sl(2,1,H)_1⊕su(2)_2": "a5⊕a1",
    "sl(2,O)⊕u(-1)": "d5⊕u1",
    "su(3,1,H)_1": "c4",
    "su(3,1,H)_2": "c4",
    "su(3,O)": "f4",
    "su(2,1,O)": "f4",
}

WHOLE = ("sl(3,O)", (52, 26), 6, "e6")

# distinguished pieces: name -> signature
PIECES = {"su(2)_H": (3, 0), "su(2)_2": (3, 0), "u(-1)": (0, 1)}

CARTAN = {"dimension": 6, "signature": (4, 2)}

RANK_WHOLE = 6
IDEALS_H = [35, 3]
IDEALS_T1 = [45, 1]

# containments that the inclusion graph must show, and ones it must not
REQUIRED_EDGES = [
    ("su(2,H)", "su(3,H)_1"),
    ("su(2,H)", "su(3,H)_2"),
    ("su(2,H)", "su(2,1,H)_1"),
    ("su(2,H)", "su(2,1,H)_2"),
    ("su(3,O)", "sl(3,O)"),
]
FORBIDDEN_EDGES = [("su(3,1,H)_1", "su(3,1,H)_2"), ("su(3,1,H)_2", "su(3,1,H)_1")]

# counting structure of the catalog: records built from 1, 2 and 4 atoms
ATOM_COUNTS = {1: 1, 2: 7, 4: 7}
