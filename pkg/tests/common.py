import pytest  # noqa: F401
from math import isqrt


FUNDAMENTAL_SOLUTIONS = [
    (2, 3, 2),
    (3, 2, 1),
    (5, 9, 4),
    (6, 5, 2),
    (7, 8, 3),
    (8, 3, 1),
    (10, 19, 6),
    (11, 10, 3),
    (12, 7, 2),
    (13, 649, 180),
    (30, 11, 2),
    (31, 1520, 273),
    (46, 24335, 3588),
    (47, 48, 7),
    (94, 2143295, 221064),
    (95, 39, 4)
]
"""Known fundamental solutions :code:`(m, x, y)` of :math:`x^2 - my^2 = 1`."""

SIMULTANEOUS_TRIPLES = [
    # (ell, m, n, r, s, t, P, P', P'')
    (3, 6, 2, 3, 1, 2, 6, 1, 3),
    (3, 6, 3, 35, 14, 20, 630, 105, 210),
    (3, 7, 5, 14, 5, 6, 105, 15, 21),
    (5, 6, 3, 12, 5, 7, 210, 35, 70),
    (6, 20, 8, 8, 2, 3, 120, 6, 15),
    (7, 12, 2, 72, 21, 51, 12852, 1071, 6426)
]
"""Triples :math:`P = mP' = nP''`, each the only one for its :math:`(\\ell, m, n)`."""

NON_SQUARES_UP_TO_13 = [m for m in range(2, 14) if isqrt(m) ** 2 != m]


def naive_polygonal(ell: int, r: int) -> int:
    """Sum of the first *r* terms :math:`1, 1 + (\\ell - 2), 1 + 2(\\ell - 2), \\ldots`."""
    return sum(1 + k * (ell - 2) for k in range(r))


def naive_multiples(ell: int, m: int, r_max: int) -> list[tuple[int, int]]:
    """All :math:`(r, s)` with :math:`P(\\ell, r) = mP(\\ell, s)` and :math:`r \\le r_{max}`.

    Looks every value up in a table of the first *r_max* polygonal numbers.
    """
    values = {}
    big = [0]
    for k in range(1, r_max + 1):
        value = ((ell - 2) * k * k - (ell - 4) * k) // 2
        values[value] = k
        big.append(value)
    return [
        (r, values[big[r] // m]) for r in range(1, r_max + 1)
        if big[r] % m == 0 and big[r] // m in values
    ]


def is_pell_solution(m: int, x: int, y: int) -> bool:
    return x * x - m * y * y == 1
