"""Small named graphs with known classifications.

Letter-labeled vertices map to integer ids as recorded next to each graph.
"""

from __future__ import annotations

from .graph import Graph

# x=0, y=1, z=2 (centre), t=3, p=4
BOWTIE = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)], name="G2")

G1 = Graph(3, [(0, 1), (1, 2), (0, 2)], name="G1")
G2 = BOWTIE
G3 = Graph(6, [(i, i + 1) for i in range(5)], name="G3")
# e=0, a=1, b=2, c=3, d=4: cycle e-a-d-c-b-e with chord a-b
G4 = Graph(5, [(0, 1), (1, 4), (4, 3), (3, 2), (2, 0), (1, 2)], name="G4")
G4_LABELS = {"e": 0, "a": 1, "b": 2, "c": 3, "d": 4}
BOWTIE_LABELS = {"x": 0, "y": 1, "z": 2, "t": 3, "p": 4}

# triangle x=0, y=1, z=2 plus isolated t=3
TRIANGLE_PLUS_VERTEX = Graph(4, [(0, 1), (1, 2), (0, 2)], name="triangle+K1")
TRIANGLE_WITH_PENDANT = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)], name="triangle+pendant")
# path whose last edge is the bridge e = (2, 3)
P4 = Graph(4, [(0, 1), (1, 2), (2, 3)], name="P4")
P4_MINUS_E = Graph(4, [(0, 1), (1, 2)], name="P4-bridge")

PETERSEN = Graph(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
    name="petersen",
)

# (graph, well_f_covered, well_covered)
CLASSIFICATIONS = [
    (G1, True, True),
    (G2, False, False),
    (G3, True, False),
    (G4, False, True),
    (TRIANGLE_PLUS_VERTEX, True, True),
    (TRIANGLE_WITH_PENDANT, True, False),
    (P4, True, True),
    (P4_MINUS_E, True, False),
]
