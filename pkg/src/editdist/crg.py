"""Colored regularity graphs and the simplex quadratic program behind g_K(p).

A CRG is a complete graph whose vertices are white or black and whose pairs
are white, black or gray. ``matrix(K, p)`` is the per-pair edit cost, and
``g_value`` minimises ``x^T M x`` over the probability simplex exactly, by
solving the stationarity system on every support and keeping the best
KKT-feasible candidate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_K = 16
P_CORE_MAX_K = 12

SIMPLEX_TOL = 1e-12
KKT_TOL = 1e-9
LINEAR_TOL = 1e-9
CORE_MARGIN = 1e-9
TIE_TOL = 1e-12

WHITE, BLACK, GRAY = "w", "b", "g"


def pair_index(i: int, j: int, k: int) -> int:
    """Row-major upper-triangle index of pair (i, j), i < j."""
    if i > j:
        i, j = j, i
    return i * k - i * (i + 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class Crg:
    k: int
    vcolor: str
    ecolor: str

    def __post_init__(self):
        if not 1 <= self.k <= MAX_K:
            raise ValueError(f"CRG size {self.k} outside 1..{MAX_K}")
        if len(self.vcolor) != self.k or set(self.vcolor) - {WHITE, BLACK}:
            raise ValueError(f"vertex colors must be {self.k} characters over 'wb'")
        npairs = self.k * (self.k - 1) // 2
        if len(self.ecolor) != npairs or set(self.ecolor) - {WHITE, BLACK, GRAY}:
            raise ValueError(f"edge colors must be {npairs} characters over 'wbg'")

    def color(self, i: int, j: int) -> str:
        if i == j:
            return self.vcolor[i]
        return self.ecolor[pair_index(i, j, self.k)]

    def pairs(self, color: str) -> list[tuple[int, int]]:
        return [(i, j) for i, j in combinations(range(self.k), 2) if self.color(i, j) == color]

    @property
    def white_vertices(self) -> list[int]:
        return [i for i, c in enumerate(self.vcolor) if c == WHITE]

    @property
    def black_vertices(self) -> list[int]:
        return [i for i, c in enumerate(self.vcolor) if c == BLACK]

    def induced(self, vertices: Sequence[int]) -> "Crg":
        vs = list(vertices)
        if not vs:
            raise ValueError("empty sub-CRG")
        ecolor = "".join(self.color(a, b) for a, b in combinations(vs, 2))
        return Crg(len(vs), "".join(self.vcolor[v] for v in vs), ecolor)

    def recolor(self, i: int, j: int, color: str) -> "Crg":
        chars = list(self.ecolor)
        chars[pair_index(i, j, self.k)] = color
        return Crg(self.k, self.vcolor, "".join(chars))

    def to_text(self) -> str:
        return f"{self.k}\n{self.vcolor}\n{self.ecolor}\n"


@dataclass(frozen=True)
class WeightSolution:
    g: float
    x: np.ndarray
    support: tuple[int, ...]
    kkt_residual: float


# ---------------------------------------------------------------------------
# constructors and parsing
# ---------------------------------------------------------------------------

def from_pairs(vcolor: str, pair_colors: dict[tuple[int, int], str], default: str = BLACK) -> Crg:
    k = len(vcolor)
    chars = [default] * (k * (k - 1) // 2)
    for (i, j), c in pair_colors.items():
        chars[pair_index(i, j, k)] = c
    return Crg(k, vcolor, "".join(chars))


def from_gray_graph(k: int, gray: Iterable[tuple[int, int]], vertex: str = WHITE,
                    other: str = BLACK) -> Crg:
    """CRG on ``k`` same-colored vertices, gray on ``gray`` and ``other`` elsewhere."""
    return from_pairs(vertex * k, {tuple(e): GRAY for e in gray}, default=other)


def k_rs(r: int, s: int) -> Crg:
    if r < 0 or s < 0 or r + s < 1:
        raise ValueError("K(r,s) needs r, s >= 0 and r + s >= 1")
    k = r + s
    if k > MAX_K:
        raise ValueError(f"K({r},{s}) exceeds {MAX_K} vertices")
    return Crg(k, WHITE * r + BLACK * s, GRAY * (k * (k - 1) // 2))


def path_crg(k: int) -> Crg:
    if not 2 <= k <= MAX_K:
        raise ValueError(f"path CRG needs 2 <= k <= {MAX_K}")
    return from_gray_graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_crg(k: int) -> Crg:
    if not 3 <= k <= MAX_K:
        raise ValueError(f"cycle CRG needs 3 <= k <= {MAX_K}")
    return from_gray_graph(k, [(i, (i + 1) % k) for i in range(k)])


def make_crg(text: str) -> Crg:
    """Parse the CRG text format.

    Line 1 is ``k``, line 2 the vertex colors over ``wb``. The pairs follow
    either as one upper-triangle string over ``wbg`` or as ``i j c`` lines
    naming every pair exactly once.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) < 2:
        raise ValueError("CRG text needs at least the size and vertex-color lines")
    try:
        k = int(lines[0])
    except ValueError:
        raise ValueError(f"bad CRG size line {lines[0]!r}") from None
    if not 1 <= k <= MAX_K:
        raise ValueError(f"CRG size {k} outside 1..{MAX_K}")
    vcolor = lines[1]
    rest = lines[2:]
    npairs = k * (k - 1) // 2
    if len(rest) == 1 and " " not in rest[0]:
        ecolor = rest[0]
    elif not rest and npairs == 0:
        ecolor = ""
    else:
        assigned: dict[int, str] = {}
        for ln in rest:
            parts = ln.split()
            if len(parts) != 3:
                raise ValueError(f"bad pair line {ln!r}")
            i, j, c = int(parts[0]), int(parts[1]), parts[2]
            if i == j or not (0 <= i < k and 0 <= j < k):
                raise ValueError(f"bad pair ({i}, {j})")
            idx = pair_index(i, j, k)
            if idx in assigned:
                raise ValueError(f"pair ({i}, {j}) assigned twice")
            assigned[idx] = c
        if len(assigned) != npairs:
            raise ValueError(f"expected {npairs} pair colors, got {len(assigned)}")
        ecolor = "".join(assigned[i] for i in range(npairs))
    return Crg(k, vcolor, ecolor)


def crg_from_token(token: str) -> Crg:
    """Inline constructors ``Krs:r,s``, ``Path:k`` and ``Cycle:k``."""
    m = re.fullmatch(r"Krs:(\d+),(\d+)", token)
    if m:
        return k_rs(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"(Path|Cycle):(\d+)", token)
    if m:
        build = path_crg if m.group(1) == "Path" else cycle_crg
        return build(int(m.group(2)))
    raise ValueError(f"unknown CRG constructor {token!r}")


# ---------------------------------------------------------------------------
# calculus
# ---------------------------------------------------------------------------

def matrix(K: Crg, p: float) -> np.ndarray:
    cost = {WHITE: p, BLACK: 1.0 - p, GRAY: 0.0}
    M = np.empty((K.k, K.k))
    for i in range(K.k):
        M[i, i] = cost[K.vcolor[i]]
    for i, j in combinations(range(K.k), 2):
        M[i, j] = M[j, i] = cost[K.color(i, j)]
    return M


def f_value(K: Crg, p: float) -> float:
    nw = K.vcolor.count(WHITE) + 2 * K.ecolor.count(WHITE)
    nb = K.vcolor.count(BLACK) + 2 * K.ecolor.count(BLACK)
    return (p * nw + (1.0 - p) * nb) / K.k**2


@lru_cache(maxsize=None)
def _support_index(k: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Per support size m: (bitmasks, member index array of shape (N, m))."""
    masks = np.arange(1 << k, dtype=np.int64)
    member = ((masks[:, None] >> np.arange(k)) & 1).astype(bool)
    sizes = member.sum(axis=1)
    out = []
    for m in range(k + 1):
        sup = masks[sizes == m]
        idx = np.nonzero(member[sup])[1].reshape(sup.size, m)
        out.append((sup, idx))
    return tuple(out)


def _batched_solve(A: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """LU solve per system; singular or inaccurate ones fall back to pinv."""
    sol = np.full(A.shape[:2], np.nan)
    sign, logdet = np.linalg.slogdet(A)
    regular = (sign != 0) & np.isfinite(logdet)
    if regular.any():
        sol[regular] = np.linalg.solve(A[regular], np.broadcast_to(rhs, (int(regular.sum()), rhs.size))[..., None])[..., 0]
    resid = np.abs(np.einsum("nij,nj->ni", A, sol) - rhs).max(axis=1)
    redo = ~(resid <= LINEAR_TOL) | ~np.isfinite(sol).all(axis=1)
    if redo.any():
        sol[redo] = np.linalg.pinv(A[redo], rcond=1e-10) @ rhs
    return sol


def _stationary_table(M: np.ndarray):
    """Solve the stationarity system on every nonempty support.

    Returns ``(g, x, ok)`` indexed by support bitmask: ``ok`` marks supports
    whose solution satisfies the system to ``LINEAR_TOL`` and is
    simplex-feasible to ``SIMPLEX_TOL``; ``x`` is zero-padded to length k.
    """
    k = M.shape[0]
    n = 1 << k
    g = np.full(n, np.inf)
    x = np.zeros((n, k))
    ok = np.zeros(n, dtype=bool)
    for m, (sup, idx) in enumerate(_support_index(k)):
        if m == 0 or sup.size == 0:
            continue
        A = np.zeros((sup.size, m + 1, m + 1))
        A[:, :m, :m] = M[idx[:, :, None], idx[:, None, :]]
        A[:, :m, m] = -1.0
        A[:, m, :m] = 1.0
        rhs = np.zeros(m + 1)
        rhs[m] = 1.0
        sol = _batched_solve(A, rhs)
        resid = np.abs(np.einsum("nij,nj->ni", A, sol) - rhs).max(axis=1)
        xs = sol[:, :m]
        good = (resid <= LINEAR_TOL) & (xs.min(axis=1) >= -SIMPLEX_TOL)
        g[sup] = np.where(good, sol[:, m], np.inf)
        ok[sup] = good
        full = np.zeros((sup.size, k))
        np.put_along_axis(full, idx, xs, axis=1)
        x[sup] = full
    return g, x, ok


def _kkt_residual(M: np.ndarray, x: np.ndarray, g: float, support: Sequence[int]) -> float:
    Mx = M @ x
    on = np.zeros(len(x), dtype=bool)
    on[list(support)] = True
    r_on = np.abs(Mx[on] - g).max() if on.any() else 0.0
    r_off = np.maximum(0.0, g - Mx[~on]).max() if (~on).any() else 0.0
    return float(max(r_on, r_off))


def g_value(K: Crg, p: float) -> WeightSolution:
    """Global minimum of ``x^T M_K(p) x`` over the simplex.

    Every support S is tried; a candidate is accepted if it is simplex
    feasible and satisfies the off-support KKT inequality
    ``(Mx)_i >= g - KKT_TOL``. Among minimal values (within ``TIE_TOL``) the
    smallest, then lexicographically first, support wins.
    """
    M = matrix(K, p)
    g, x, ok = _stationary_table(M)
    Mx = np.einsum("sj,ij->si", x, M)
    kkt = ok & ((Mx - g[:, None]) >= -KKT_TOL).all(axis=1)
    if not kkt.any():
        raise ArithmeticError(f"no KKT point found for {K} at p={p}")
    best = g[kkt].min()
    ties = np.flatnonzero(kkt & (g <= best + TIE_TOL))

    def tie_key(s: int):
        members = tuple(i for i in range(K.k) if s >> i & 1)
        return (len(members), members)

    s = min(ties, key=tie_key)
    support = tie_key(s)[1]
    xs = np.clip(x[s], 0.0, None)
    xs = xs / xs.sum()
    value = float(g[s])
    return WeightSolution(value, xs, tuple(i for i in support if xs[i] > 0),
                          _kkt_residual(M, xs, value, support))


def sub_crg_values(K: Crg, p: float) -> np.ndarray:
    """g of every induced sub-CRG, indexed by vertex bitmask (index 0 is inf).

    The minimum over a face of the simplex is attained at a stationary point
    of some sub-face, so a subset-minimum over the stationary table gives all
    sub-CRG optima from one pass.
    """
    g, _, _ = _stationary_table(matrix(K, p))
    sub = g.copy()
    idx = np.arange(sub.size)
    for b in range(K.k):
        has = (idx >> b) & 1 == 1
        sub[has] = np.minimum(sub[has], sub[idx[has] ^ (1 << b)])
    return sub


def components(K: Crg) -> list[Crg]:
    """Induced sub-CRGs on the connected components of the non-gray pairs."""
    return [K.induced(vs) for vs in component_vertex_sets(K)]


def component_vertex_sets(K: Crg) -> list[list[int]]:
    parent = list(range(K.k))

    def find(v: int) -> int:
        while parent[v] != v:
            v = parent[v]
        return v

    for i, j in combinations(range(K.k), 2):
        if K.color(i, j) != GRAY:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for v in range(K.k):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def sub_crgs(K: Crg, include_self: bool = False) -> Iterator[Crg]:
    for size in range(1, K.k + (1 if include_self else 0)):
        for vs in combinations(range(K.k), size):
            yield K.induced(vs)


def is_p_core(K: Crg, p: float) -> bool:
    if K.k > P_CORE_MAX_K:
        raise ValueError(f"is_p_core limited to {P_CORE_MAX_K} vertices")
    if K.k == 1:
        return True
    sub = sub_crg_values(K, p)
    full = sub[-1]
    return bool((sub[1:-1] > full + CORE_MARGIN).all())


def negative(K: Crg) -> Crg:
    swap = str.maketrans({WHITE: BLACK, BLACK: WHITE})
    return Crg(K.k, K.vcolor.translate(swap), K.ecolor.translate(swap))
