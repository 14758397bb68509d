"""Small graphs shared by several test modules."""
from hcoloring.catalog import named
from hcoloring.multigraph import build


def cycle(n):
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def cube():
    return build(8, [(v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)])


def barbell():
    """Two S4 arms joined by a bridge: cubic, 6 vertices, 9 edges, one bridge."""
    return build(6, [(0, 1), (0, 1), (0, 2), (1, 2), (2, 5), (3, 4), (3, 4), (3, 5), (4, 5)])


SMALL = {
    "K4": lambda: named("K4").graph,
    "K33": lambda: named("K33").graph,
    "PRISM": lambda: named("PRISM").graph,
    "Q3": cube,
    "THETA": lambda: build(2, [(0, 1)] * 3),
    "DIGON": lambda: build(2, [(0, 1)] * 2),
    "C5": lambda: cycle(5),
    "C6": lambda: cycle(6),
    "S4": lambda: named("S4").graph,
    "P_MINUS_V": lambda: named("P_MINUS_V").graph,
    "BARBELL": barbell,
    "P": lambda: named("P").graph,
    "S10": lambda: named("S10").graph,
    "S12": lambda: named("S12").graph,
}


def graph(name):
    return SMALL[name]()


# (G, H) pairs with |E(G)| <= 12
ORACLE_PAIRS = [
    ("K4", "S10"), ("K4", "P"), ("K4", "S4"), ("K4", "K4"), ("K4", "THETA"), ("K4", "C5"),
    ("K33", "S10"), ("K33", "S12"), ("PRISM", "K4"), ("PRISM", "S4"), ("PRISM", "THETA"),
    ("Q3", "S10"), ("Q3", "P"), ("Q3", "PRISM"),
    ("THETA", "THETA"), ("THETA", "S10"), ("THETA", "P"),
    ("DIGON", "C6"), ("C5", "DIGON"), ("C6", "DIGON"), ("C5", "C5"), ("C6", "C5"),
    ("S4", "S4"), ("S4", "S10"), ("S4", "P"),
    ("P_MINUS_V", "P"), ("P_MINUS_V", "C5"),
    ("BARBELL", "S10"), ("BARBELL", "P"), ("BARBELL", "S4"), ("BARBELL", "S12"),
]
