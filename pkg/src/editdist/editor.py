"""Monte Carlo editing of G(n, p): apply the partition/completion recipes and
certify that the edited graph lies in the target property.

Randomness comes from :func:`stream`, which derives an independent PCG64
generator from ``(seed, trial, purpose)`` so trials can run in any order.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Union

import numpy as np

from .crg import matrix, path_crg
from .edf import comp_k, ed_closed
from .spectral import path_weights

MAX_N = 4096
EXHAUSTIVE_TRIPLES_N = 300


def stream(seed: int, trial: int = 0, purpose: str = "") -> np.random.Generator:
    tag = zlib.crc32(purpose.encode())
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(trial, tag))))


class DenseGraph:
    """Symmetric irreflexive graph stored as packed bit rows."""

    def __init__(self, adjacency: np.ndarray):
        A = np.asarray(adjacency, dtype=bool)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError("adjacency must be square")
        if A.shape[0] > MAX_N:
            raise ValueError(f"n={A.shape[0]} exceeds {MAX_N}")
        if A.diagonal().any() or (A != A.T).any():
            raise ValueError("adjacency must be symmetric with an empty diagonal")
        self.n = A.shape[0]
        self.rows = np.packbits(A, axis=1)

    @classmethod
    def complete(cls, n: int) -> "DenseGraph":
        return cls(~np.eye(n, dtype=bool))

    @classmethod
    def empty(cls, n: int) -> "DenseGraph":
        return cls(np.zeros((n, n), dtype=bool))

    def adjacency(self) -> np.ndarray:
        return np.unpackbits(self.rows, axis=1, count=self.n).astype(bool)

    @property
    def pairs(self) -> int:
        return self.n * (self.n - 1) // 2

    def edge_count(self) -> int:
        return int(np.triu(self.adjacency(), 1).sum())

    def density(self) -> float:
        return self.edge_count() / self.pairs if self.pairs else 0.0

    def __eq__(self, other) -> bool:
        return isinstance(other, DenseGraph) and self.n == other.n and np.array_equal(self.rows, other.rows)


@dataclass(frozen=True)
class Coloring:
    """Vertex color classes; the edited graph must have no monochromatic edge."""
    colors: np.ndarray

    def classes(self) -> list[np.ndarray]:
        return [np.flatnonzero(self.colors == c) for c in np.unique(self.colors)]

    def verify(self, H: DenseGraph) -> bool:
        A = H.adjacency()
        return not (A & (self.colors[:, None] == self.colors[None, :])).any()


@dataclass(frozen=True)
class LayerOrder:
    """Ordered vertex classes; edges must be oriented from lower to higher class
    and that orientation must be transitive."""
    layers: np.ndarray

    def verify(self, H: DenseGraph, rng: Optional[np.random.Generator] = None) -> bool:
        A = H.adjacency()
        c = self.layers
        if (A & (c[:, None] == c[None, :])).any():
            return False
        middles = np.arange(H.n)
        if H.n > EXHAUSTIVE_TRIPLES_N:
            rng = rng or stream(0, 0, "triples")
            middles = rng.choice(H.n, size=EXHAUSTIVE_TRIPLES_N, replace=False)
        for v in middles:
            below = np.flatnonzero(A[v] & (c < c[v]))
            above = np.flatnonzero(A[v] & (c > c[v]))
            if below.size and above.size and not A[np.ix_(below, above)].all():
                return False
        return True


@dataclass(frozen=True)
class Completion:
    def verify(self, H: DenseGraph) -> bool:
        return H.edge_count() == H.pairs


Certificate = Union[Coloring, LayerOrder, Completion]


@dataclass(frozen=True)
class EditReport:
    added: int
    deleted: int
    fraction: float
    certificate: Certificate
    edited: DenseGraph

    def verify(self) -> bool:
        return self.certificate.verify(self.edited)


def _report(G: DenseGraph, A_new: np.ndarray, cert: Certificate) -> EditReport:
    A = G.adjacency()
    upper = np.triu(np.ones_like(A), 1)
    added = int((~A & A_new & upper).sum())
    deleted = int((A & ~A_new & upper).sum())
    frac = (added + deleted) / G.pairs if G.pairs else 0.0
    return EditReport(added, deleted, frac, cert, DenseGraph(A_new))


def sample_gnp(n: int, p: float, seed: int, trial: int = 0, purpose: str = "gnp") -> DenseGraph:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n={n} outside 1..{MAX_N}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    rng = stream(seed, trial, purpose)
    U = np.triu(rng.random((n, n)) < p, 1)
    return DenseGraph(U | U.T)


def edit_word_threecolor(G: DenseGraph, seed: int, trial: int = 0) -> EditReport:
    colors = stream(seed, trial, "threecolor").integers(0, 3, size=G.n)
    A = G.adjacency()
    A_new = A & (colors[:, None] != colors[None, :])
    return _report(G, A_new, Coloring(colors))


def edit_layered(G: DenseGraph, weights: Sequence[float], seed: int, trial: int = 0) -> EditReport:
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1 or w.size == 0 or (w < -1e-12).any() or abs(w.sum() - 1.0) > 1e-9:
        raise ValueError("weights must be a nonnegative vector summing to 1")
    w = np.clip(w, 0.0, None)
    layers = stream(seed, trial, "layers").choice(w.size, size=G.n, p=w / w.sum())
    A = G.adjacency()
    gap = np.abs(layers[:, None] - layers[None, :])
    A_new = (A & (gap == 1)) | (gap >= 2)
    return _report(G, A_new, LayerOrder(layers))


def edit_complete(G: DenseGraph) -> EditReport:
    return _report(G, ~np.eye(G.n, dtype=bool), Completion())


def expected_layered_fraction(weights: Sequence[float], p: float) -> float:
    """x^T M x for the path CRG with these weights: the mean edit fraction."""
    w = np.asarray(weights, dtype=float)
    if w.size == 1:
        return float(p)
    return float(w @ matrix(path_crg(w.size), p) @ w)


class CurvePoint(NamedTuple):
    p: float
    mean_fraction: float
    closed_form: float
    recipe: str
    std: float
    all_certified: bool


def _mean_std(values: list[float]) -> tuple[float, float]:
    arr = np.array(values)
    return float(arr.mean()), float(arr.std(ddof=1)) if arr.size > 1 else 0.0


def comp_weights(p: float) -> Optional[np.ndarray]:
    """Layer weights for the comparability recipe, or None past 3/4."""
    if p >= 0.75:
        return None
    return path_weights(comp_k(p), p)


def estimate_curve(prop: str, n: int, p_grid: Sequence[float], trials: int, seed: int) -> list[CurvePoint]:
    """Mean edit fraction of the best recipe at each density, beside the closed form."""
    if prop not in ("word", "comp"):
        raise ValueError("estimate_curve supports 'word' and 'comp'")
    if trials < 1:
        raise ValueError("need at least one trial")
    out = []
    for i, p in enumerate(p_grid):
        results: dict[str, list[EditReport]] = {}
        for t in range(trials):
            G = sample_gnp(n, p, seed, t, purpose=f"gnp:{i}")
            results.setdefault("complete", []).append(edit_complete(G))
            if prop == "word":
                results.setdefault("threecolor", []).append(edit_word_threecolor(G, seed, t))
            else:
                w = comp_weights(p)
                if w is not None:
                    results.setdefault(f"layered:{w.size}", []).append(edit_layered(G, w, seed, t))
        stats = {name: _mean_std([r.fraction for r in reps]) for name, reps in results.items()}
        recipe = min(stats, key=lambda name: (stats[name][0], name))
        certified = all(r.verify() for r in results[recipe])
        mean, std = stats[recipe]
        out.append(CurvePoint(p, mean, ed_closed(prop, p), recipe, std, certified))
    return out
