"""Hard-coded reference rows: rational forms of g for small path CRGs, their
optimal weights, and Chebyshev coefficient lists. These are oracles for the
verification suites, never used by the solvers themselves."""

from __future__ import annotations

import math

# g of the k-vertex path CRG on (p_k, p_{k+1}]
PATH_G_ROWS = {
    2: lambda p: p / 2,
    3: lambda p: p / (1 + 2 * p),
    4: lambda p: (-1 + 3 * p - p**2) / (2 * (-1 + 3 * p)),
    5: lambda p: (-2 + 4 * p - p**3) / (-4 + 6 * p + 3 * p**2),
    6: lambda p: (-1 - 2 * p + 9 * p**2 - 5 * p**3) / (2 * (-1 - 2 * p + 6 * p**2)),
    7: lambda p: (-2 + 13 * p - 20 * p**2 + 6 * p**3 + 2 * p**4) / (-3 + 18 * p - 18 * p**2 - 4 * p**3),
    8: lambda p: (-4 + 15 * p - 9 * p**2 - 14 * p**3 + 11 * p**4) / (2 * (-3 + 9 * p - 10 * p**3)),
    9: lambda p: (-2 - 3 * p + 36 * p**2 - 55 * p**3 + 20 * p**4 + 3 * p**5)
    / (-3 - 6 * p + 45 * p**2 - 40 * p**3 - 5 * p**4),
    10: lambda p: (-3 + 29 * p - 75 * p**2 + 59 * p**3 + 10 * p**4 - 19 * p**5)
    / (-4 + 36 * p - 72 * p**2 + 20 * p**3 + 30 * p**4),
}

PATH_WEIGHT_ROWS = {
    2: lambda p: [1 / 2, 1 / 2],
    3: lambda p: [v / (1 + 2 * p) for v in (p, 1, p)],
    4: lambda p: [v / (2 * (-1 + 3 * p)) for v in (-1 + 2 * p, p, p, -1 + 2 * p)],
    5: lambda p: [v / (-4 + 6 * p + 3 * p**2)
                  for v in (-1 + p + p**2, -1 + 2 * p, p**2, -1 + 2 * p, -1 + p + p**2)],
    6: lambda p: [v / (2 * (-1 - 2 * p + 6 * p**2))
                  for v in (p * (-2 + 3 * p), -1 + p + p**2, p * (-1 + 2 * p),
                            p * (-1 + 2 * p), -1 + p + p**2, p * (-2 + 3 * p))],
}

# exact transition points where they have short closed forms
EXACT_TRANSITIONS = {
    2: 0.0,
    3: 0.5,
    4: (math.sqrt(5) - 1) / 2,
    5: 2 / 3,
    7: math.sqrt(2) / 2,
}

# six-decimal transition points
ROUNDED_TRANSITIONS = {6: 0.692021, 8: 0.716881, 9: 0.723607, 10: 0.728446}

# coefficients, constant term first
CHEBYSHEV_T = [
    [1],
    [0, 1],
    [-1, 0, 2],
    [0, -3, 0, 4],
    [1, 0, -8, 0, 8],
    [0, 5, 0, -20, 0, 16],
    [-1, 0, 18, 0, -48, 0, 32],
]
CHEBYSHEV_U = [
    [1],
    [0, 2],
    [-1, 0, 4],
    [0, -4, 0, 8],
    [1, 0, -12, 0, 16],
    [0, 6, 0, -32, 0, 32],
    [-1, 0, 24, 0, -80, 0, 64],
]


def poly_eval(coeffs: list[float], x: float) -> float:
    return sum(c * x**i for i, c in enumerate(coeffs))
