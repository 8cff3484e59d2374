"""Matrices and vectors printed in the worked examples, transcribed verbatim."""

EX01_CARTAN = (
    (1, 1, 2, 2, 2, 4),
    (0, 1, 2, 0, 2, 4),
    (0, 0, 1, 0, 0, 2),
    (0, 0, 0, 1, 1, 2),
    (0, 0, 0, 0, 1, 2),
    (0, 0, 0, 0, 0, 1),
)

EX01_COXETER = (
    (1, -1, 0, -2, 2, 0),
    (1, 0, -2, -2, 0, 4),
    (2, 0, -3, -4, 0, 6),
    (2, -2, 0, -3, 3, 0),
    (2, 0, -4, -3, 0, 6),
    (4, 0, -6, -6, 0, 9),
)

# dim tau_2^k I_i for k = 0, 1, ... as far as printed
EX01_ORBITS = {
    1: [(1, 1, 2, 2, 2, 4), (0, 9, 12, 0, 12, 16), (15, 40, 60, 18, 48, 72), (35, 147, 210, 40, 168, 240)],
    2: [(0, 1, 2, 0, 2, 4), (3, 12, 18, 4, 16, 24), (15, 55, 80, 18, 66, 96)],
    3: [(0, 0, 1, 0, 0, 2), (0, 6, 9, 0, 8, 12), (10, 30, 45, 12, 36, 54)],
    4: [(0, 0, 0, 1, 1, 2), (0, 6, 8, 0, 9, 12), (12, 32, 48, 15, 40, 60)],
    5: [(0, 0, 0, 0, 1, 2), (2, 8, 12, 3, 12, 18), (12, 44, 64, 15, 55, 80)],
    6: [(0, 0, 0, 0, 0, 1), (0, 4, 6, 0, 6, 9), (8, 24, 36, 10, 30, 45)],
}

# q(x) = x1^2 + ... + x6^2 - x1x2 - 2x2x3 - 2x1x4 + 2x1x5 - 2x2x5 - x4x5 + 4x2x6 - 2x3x6 - 2x5x6
EX01_QUADRATIC_TERMS = {
    (0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1, (4, 4): 1, (5, 5): 1,
    (0, 1): -1, (1, 2): -2, (0, 3): -2, (0, 4): 2, (1, 4): -2,
    (3, 4): -1, (1, 5): 4, (2, 5): -2, (4, 5): -2,
}

EXAM_CARTAN = (
    (1, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    (1, 1, 0, 0, 1, 1, 0, 0, 1, 0),
    (0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 1, 1, 0, 0, 1, 0),
    (0, 0, 1, 1, 1, 1, 1, 0, 0, 0),
    (0, 0, 1, 0, 0, 1, 0, 1, 1, 1),
    (0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 1, 1),
)

EXAM_ISOTROPIC = (1, 2, 0, 1, 0, 3, 2, 2, 0, 1)


def exam2_blocked_cartan():
    """``[[C, 0, 0], [C, C, C], [0, 0, C]]`` assembled block by block."""
    zero = ((0,) * 10,) * 10
    pattern = ((EXAM_CARTAN, zero, zero), (EXAM_CARTAN, EXAM_CARTAN, EXAM_CARTAN), (zero, zero, EXAM_CARTAN))
    return tuple(
        tuple(x for block in block_row for x in block[r]) for block_row in pattern for r in range(10)
    )
