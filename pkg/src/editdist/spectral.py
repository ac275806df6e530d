"""Closed forms for path CRGs: Chebyshev polynomials, transition points,
the tridiagonal Toeplitz eigensystem, and g / optimal weights of P_k.

With ``P = (2p-1)/(1-p) = 2cos(theta)`` the optimal weights of the k-vertex
path CRG solve ``x_{a-1} - P x_a + x_{a+1} = G`` with ``x_0 = x_{k+1} = 0``,
where ``G = 1 - g/(1-p)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

WINDOW_SLACK = 1e-12


def chebyshev(kind: str, n: int, x: float) -> float:
    """T_n(x) (``kind='first'``) or U_n(x) (``kind='second'``) by recurrence."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    if kind in ("first", "T"):
        prev, cur = 1.0, x
    elif kind in ("second", "U"):
        prev, cur = 1.0, 2.0 * x
    else:
        raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")
    if n == 0:
        return 1.0
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def transition_point(k: int) -> float:
    """Density at which the optimal path CRG moves from k-1 to k vertices."""
    if k < 2:
        raise ValueError("transition points are defined for k >= 2")
    return 1.0 - 1.0 / (2.0 * math.cos(2.0 * math.pi / (k + 1)) + 2.0)


def reparam(p: float) -> float:
    """P = (2p - 1)/(1 - p)."""
    return (2.0 * p - 1.0) / (1.0 - p)


def density_from_reparam(P: float) -> float:
    return (P + 1.0) / (P + 2.0)


@dataclass(frozen=True)
class PathParams:
    k: int
    p: float
    P: float
    theta: float
    G: float


@dataclass(frozen=True)
class EigenPair:
    a: int
    lam: float
    w: np.ndarray
    wdot1: float


def toeplitz_matrix(k: int, P: float) -> np.ndarray:
    """k x k tridiagonal matrix with -P on the diagonal and 1 beside it."""
    return -P * np.eye(k) + np.eye(k, k=1) + np.eye(k, k=-1)


def toeplitz_eigs(k: int, P: float) -> list[EigenPair]:
    if k < 1:
        raise ValueError("k must be >= 1")
    scale = math.sqrt(2.0 / (k + 1))
    b = np.arange(1, k + 1)
    out = []
    for a in range(1, k + 1):
        phi = a * math.pi / (k + 1)
        w = scale * np.sin(phi * b)
        wdot1 = 0.0 if a % 2 == 0 else scale * (1.0 + math.cos(phi)) / math.sin(phi)
        out.append(EigenPair(a, 2.0 * math.cos(phi) - P, w, wdot1))
    return out


def _check_window(k: int, p: float) -> None:
    if k < 2:
        raise ValueError("path CRGs need k >= 2")
    if k == 2:
        if not -WINDOW_SLACK <= p <= 1.0 + WINDOW_SLACK:
            raise ValueError(f"p={p} outside [0, 1]")
        return
    lo = transition_point(k)
    hi = transition_point(2 * k - 1)
    if not lo - WINDOW_SLACK <= p <= hi + WINDOW_SLACK:
        raise ValueError(
            f"p={p} outside the closed-form window [{lo:.12g}, {hi:.12g}] for k={k}")


def _angles(k: int, p: float) -> tuple[float, float, float]:
    """(P, theta, tan((k+1) theta / 2)) with the tangent in a form that is
    finite at theta = 2 pi/(k+1)."""
    P = reparam(p)
    theta = math.acos(max(-1.0, min(1.0, P / 2.0)))
    h = (k + 1) * theta
    return P, theta, math.sin(h) / (1.0 + math.cos(h))


def path_params(k: int, p: float) -> PathParams:
    _check_window(k, p)
    if k == 2:
        P = reparam(p) if p < 1 else math.inf
        theta = math.acos(max(-1.0, min(1.0, P / 2.0))) if P <= 2 else float("nan")
        G = 1.0 - 0.5 * p / (1.0 - p) if p < 1 else -math.inf
        return PathParams(k, p, P, theta, G)
    P, theta, t = _angles(k, p)
    G = (2.0 - P) / ((k + 1) - (1.0 + math.cos(theta)) / math.sin(theta) * t)
    return PathParams(k, p, P, theta, G)


def path_g(k: int, p: float) -> float:
    """g of the k-vertex path CRG from the closed form.

    Valid for p in [p_k, p_{2k-1}] (k >= 3), where the path CRG is p-core and
    its optimum has full support; p_k itself is the right-continuous limit.
    For k = 2 this is p/2 on [0, 1].
    """
    if k == 2:
        _check_window(k, p)
        return p / 2.0
    prm = path_params(k, p)
    return (1.0 - prm.G) * (1.0 - p)


def path_g_chebyshev(k: int, p: float) -> float:
    """Same quantity through ``(2-P)[(k+1) - 2/(2-P) (1-T_{k+1}(P/2))/U_k(P/2)]^-1``.

    Removable 0/0 at p = p_k; kept as an independent cross-check away from it.
    """
    _check_window(k, p)
    P = reparam(p)
    c = P / 2.0
    G = (2.0 - P) / ((k + 1) - 2.0 / (2.0 - P)
                     * (1.0 - chebyshev("first", k + 1, c)) / chebyshev("second", k, c))
    return (1.0 - G) * (1.0 - p)


def path_weights(k: int, p: float) -> np.ndarray:
    """Optimal weight vector of the k-vertex path CRG (same window as path_g)."""
    if k == 2:
        _check_window(k, p)
        return np.array([0.5, 0.5])
    prm = path_params(k, p)
    _, theta, t = _angles(k, p)
    a = np.arange(1, k + 1)
    return prm.G / (2.0 - prm.P) * (1.0 - np.cos(a * theta) - np.sin(a * theta) * t)


def transition_value(k: int) -> float:
    """Common value of g for the (k-1)- and k-vertex path CRGs at p_k."""
    pk = transition_point(k)
    return 1.0 - pk - (3.0 - 4.0 * pk) / (k + 1)


def second_eigenvalue(k: int, p: float) -> float:
    return 2.0 * math.cos(2.0 * math.pi / (k + 1)) - reparam(p)
