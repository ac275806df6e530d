"""Edit distance functions: closed-form curves, CRG lower envelopes, maxima."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .crg import Crg, g_value
from .spectral import path_g, reparam, transition_point

PROPERTIES = ("word", "kword", "comp")
ENVELOPE_TIE_TOL = 1e-12


def _normalize_property(prop: str) -> str:
    base = prop.split(":", 1)[0]
    if base not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}; expected one of {PROPERTIES}")
    if base == "kword" and ":" in prop and int(prop.split(":", 1)[1]) < 2:
        raise ValueError("k-word-representability needs k >= 2")
    return base


@dataclass(frozen=True)
class Piece:
    lo: float
    hi: float
    lo_closed: bool
    hi_closed: bool
    label: str
    fn: Callable[[float], float]

    def contains(self, p: float) -> bool:
        above = p >= self.lo if self.lo_closed else p > self.lo
        below = p <= self.hi if self.hi_closed else p < self.hi
        return above and below


@dataclass(frozen=True)
class PiecewiseEdf:
    prop: str
    pieces: tuple[Piece, ...]

    def piece_at(self, p: float) -> Piece:
        for piece in self.pieces:
            if piece.contains(p):
                return piece
        raise ValueError(f"p={p} not covered by the {self.prop} pieces")

    def __call__(self, p: float) -> float:
        return self.piece_at(p).fn(p)


def _path_piece(k: int) -> Callable[[float], float]:
    return lambda p: path_g(k, p)


def comp_k(p: float) -> int:
    """Least k >= 2 with p <= p_{k+1}; the active path CRG at density p < 3/4."""
    if p <= 0.5:
        return 2
    if p >= 0.75:
        raise ValueError("no path piece at p >= 3/4")
    theta = math.acos(reparam(p) / 2.0)
    k = max(2, math.ceil(2.0 * math.pi / theta - 2.0))
    while p > transition_point(k + 1):
        k += 1
    while k > 2 and p <= transition_point(k):
        k -= 1
    return k


def piecewise(prop: str, kmax: int = 16) -> PiecewiseEdf:
    """Piecewise description of the closed form.

    The comparability curve has infinitely many path pieces accumulating at
    3/4; pieces past ``kmax`` are merged into one piece evaluated through
    :func:`ed_closed`, so the description still covers [0, 1].
    """
    prop = _normalize_property(prop)
    if prop == "word":
        pieces = (Piece(0.0, 0.75, True, True, "p/3", lambda p: p / 3.0),
                  Piece(0.75, 1.0, False, True, "1-p", lambda p: 1.0 - p))
    elif prop == "kword":
        pieces = (Piece(0.0, 0.5, True, True, "p", lambda p: p),
                  Piece(0.5, 1.0, False, True, "1-p", lambda p: 1.0 - p))
    else:
        parts = [Piece(0.0, 0.5, True, True, "p/2", lambda p: p / 2.0)]
        for k in range(3, kmax + 1):
            parts.append(Piece(transition_point(k), transition_point(k + 1), False, True,
                               f"path:{k}", _path_piece(k)))
        parts.append(Piece(transition_point(kmax + 1), 0.75, False, False,
                           f"path:>{kmax}", lambda p: ed_closed("comp", p)))
        parts.append(Piece(0.75, 1.0, True, True, "1-p", lambda p: 1.0 - p))
        pieces = tuple(parts)
    return PiecewiseEdf(prop, pieces)


def ed_closed_piece(prop: str, p: float) -> tuple[float, str]:
    """Closed-form value and the label of the active piece."""
    prop = _normalize_property(prop)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    if prop == "word":
        return (p / 3.0, "p/3") if p <= 0.75 else (1.0 - p, "1-p")
    if prop == "kword":
        return (p, "p") if p <= 0.5 else (1.0 - p, "1-p")
    if p <= 0.5:
        return p / 2.0, "p/2"
    if p >= 0.75:
        return 1.0 - p, "1-p"
    k = comp_k(p)
    return path_g(k, p), f"path:{k}"


def ed_closed(prop: str, p: float) -> float:
    return ed_closed_piece(prop, p)[0]


def envelope(library: Sequence[Crg], grid: Sequence[float]) -> list[tuple[float, float, int]]:
    """Pointwise minimum of g_K(p) over ``library``; ties go to the lowest index."""
    if not library:
        raise ValueError("empty CRG library")
    out = []
    for p in grid:
        values = [g_value(K, p).g for K in library]
        best = min(values)
        arg = next(i for i, v in enumerate(values) if v <= best + ENVELOPE_TIE_TOL)
        out.append((p, best, arg))
    return out


def max_point(prop: str) -> tuple[float, float]:
    prop = _normalize_property(prop)
    return {"word": (0.75, 0.25), "kword": (0.5, 0.5), "comp": (2.0 / 3.0, 5.0 / 18.0)}[prop]
