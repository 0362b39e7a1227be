"""Hand-transcribed reference multiplication tables for dimensions 2..6.

Each table maps a 1-based cell (i, j) to the product e_i e_j as a list of
(basis label, coefficient) pairs.  These transcriptions are the independent
oracle the construction is checked against; they are typed out from the
published tables, not generated.
"""

from fractions import Fraction

H = Fraction(1, 2)

GOLDEN = {
    2: {
        (1, 1): [(1, 1)], (1, 2): [(2, 1)],
        (2, 1): [(2, 1)], (2, 2): [(1, 1)],
    },
    3: {
        (1, 1): [(1, 1)], (1, 2): [(2, 1)], (1, 3): [(3, 1)],
        (2, 1): [(2, 1)], (2, 2): [(1, H), (3, H)], (2, 3): [(1, H), (2, H)],
        (3, 1): [(3, 1)], (3, 2): [(1, H), (2, H)], (3, 3): [(1, H), (2, H)],
    },
    4: {
        (1, 1): [(1, 1)], (1, 2): [(2, 1)], (1, 3): [(3, 1)], (1, 4): [(4, 1)],
        (2, 1): [(2, 1)], (2, 2): [(1, H), (3, H)], (2, 3): [(2, H), (4, H)], (2, 4): [(1, H), (3, H)],
        (3, 1): [(3, 1)], (3, 2): [(2, H), (4, H)], (3, 3): [(1, 1)], (3, 4): [(2, 1)],
        (4, 1): [(4, 1)], (4, 2): [(1, H), (3, H)], (4, 3): [(2, 1)], (4, 4): [(1, H), (3, H)],
    },
    5: {
        (1, 1): [(1, 1)], (1, 2): [(2, 1)], (1, 3): [(3, 1)], (1, 4): [(4, 1)], (1, 5): [(5, 1)],
        (2, 1): [(2, 1)], (2, 2): [(1, H), (3, H)], (2, 3): [(2, H), (4, H)], (2, 4): [(3, H), (5, H)], (2, 5): [(1, H), (4, H)],
        (3, 1): [(3, 1)], (3, 2): [(2, H), (4, H)], (3, 3): [(1, H), (5, H)], (3, 4): [(1, H), (2, H)], (3, 5): [(2, H), (3, H)],
        (4, 1): [(4, 1)], (4, 2): [(3, H), (5, H)], (4, 3): [(1, H), (2, H)], (4, 4): [(1, H), (2, H)], (4, 5): [(2, H), (3, H)],
        (5, 1): [(5, 1)], (5, 2): [(1, H), (4, H)], (5, 3): [(2, H), (3, H)], (5, 4): [(2, H), (3, H)], (5, 5): [(1, H), (4, H)],
    },
    6: {
        (1, 1): [(1, 1)], (1, 2): [(2, 1)], (1, 3): [(3, 1)], (1, 4): [(4, 1)], (1, 5): [(5, 1)], (1, 6): [(6, 1)],
        (2, 1): [(2, 1)], (2, 2): [(1, H), (3, H)], (2, 3): [(2, H), (4, H)], (2, 4): [(3, H), (5, H)], (2, 5): [(4, H), (6, H)], (2, 6): [(1, H), (5, H)],
        (3, 1): [(3, 1)], (3, 2): [(2, H), (4, H)], (3, 3): [(1, H), (5, H)], (3, 4): [(2, H), (6, H)], (3, 5): [(1, H), (3, H)], (3, 6): [(2, H), (4, H)],
        (4, 1): [(4, 1)], (4, 2): [(3, H), (5, H)], (4, 3): [(2, H), (6, H)], (4, 4): [(1, 1)], (4, 5): [(2, 1)], (4, 6): [(3, 1)],
        (5, 1): [(5, 1)], (5, 2): [(4, H), (6, H)], (5, 3): [(1, H), (3, H)], (5, 4): [(2, 1)], (5, 5): [(1, H), (3, H)], (5, 6): [(2, H), (4, H)],
        (6, 1): [(6, 1)], (6, 2): [(1, H), (5, H)], (6, 3): [(2, H), (4, H)], (6, 4): [(3, 1)], (6, 5): [(2, H), (4, H)], (6, 6): [(1, H), (5, H)],
    },
}


def golden_tensor(dimension):
    """Nested-list tensor for the transcription of the given dimension."""
    table = GOLDEN[dimension]
    tensor = [
        [[Fraction(0)] * dimension for _ in range(dimension)] for _ in range(dimension)
    ]
    for (i, j), cells in table.items():
        for k, c in cells:
            tensor[i - 1][j - 1][k - 1] = Fraction(c)
    return tensor


def golden_row(dimension, i, j):
    """Coefficient row of cell (i, j) in the transcription."""
    row = [Fraction(0)] * dimension
    for k, c in GOLDEN[dimension][(i, j)]:
        row[k - 1] = Fraction(c)
    return tuple(row)
