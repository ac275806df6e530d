"""Small labeled graphs, named forbidden graphs and brute-force membership oracles.

Vertices are ``0..n-1``. Adjacency is stored as one integer bitmask per vertex,
which keeps the exhaustive searches below cheap for desk-sized graphs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 32
CHROMATIC_MAX_VERTICES = 16
COMPARABILITY_MAX_EDGES = 24
WORD_MAX_EDGES = 22


class BudgetExceeded(RuntimeError):
    """Raised when an exhaustive search would exceed its declared size budget."""


@dataclass(frozen=True)
class SmallGraph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))
        masks = [0] * self.n
        for i, j in norm:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        object.__setattr__(self, "_masks", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SmallGraph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self._masks[i] >> j & 1)

    def neighbors(self, v: int) -> list[int]:
        mask = self._masks[v]
        return [u for u in range(self.n) if mask >> u & 1]

    def degree(self, v: int) -> int:
        return bin(self._masks[v]).count("1")

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def induced(self, vertices: Sequence[int]) -> "SmallGraph":
        index = {v: i for i, v in enumerate(vertices)}
        return SmallGraph.from_edges(
            len(vertices),
            ((index[i], index[j]) for i, j in self.edges if i in index and j in index),
        )

    def to_text(self) -> str:
        lines = [str(self.n)] + [f"{i} {j}" for i, j in sorted(self.edges)]
        return "\n".join(lines) + "\n"


def complement(G: SmallGraph) -> SmallGraph:
    return SmallGraph.from_edges(
        G.n, (e for e in combinations(range(G.n), 2) if e not in G.edges)
    )


# ---------------------------------------------------------------------------
# named graphs
# ---------------------------------------------------------------------------

def _net_edges() -> list[tuple[int, int]]:
    # triangle 0,1,2 with pendant 3+i on vertex i
    return [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]


def _prism_edges() -> list[tuple[int, int]]:
    # triangles 0,1,2 and 3,4,5 joined by the matching i -- 3+i
    return _net_edges() + [(3, 4), (4, 5), (3, 5)]


def _add_hub(n: int, edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    return edges + [(v, n) for v in range(n)]


def _cycle_edges(t: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % t) for i in range(t)]


def make_named(name: str, *params: int) -> SmallGraph:
    """Build one of the named graphs.

    ``F1``/``F2`` are the net/prism with a dominating vertex (label 6),
    ``F1p``/``F2p`` are the net and the triangular prism, ``W5`` is the 5-cycle
    with hub 5. Parameterised schemas: ``cycle(t)``, ``wheel(t)`` with t >= 3,
    and ``complete(n)``, ``empty(n)``, ``path(n)``, ``crown(n)`` with n >= 1.
    """
    fixed = {
        "F1": lambda: (7, _add_hub(6, _net_edges())),
        "F2": lambda: (7, _add_hub(6, _prism_edges())),
        "F1p": lambda: (6, _net_edges()),
        "F2p": lambda: (6, _prism_edges()),
        "W5": lambda: (6, _add_hub(5, _cycle_edges(5))),
    }
    if name in fixed:
        if params:
            raise ValueError(f"{name} takes no parameters")
        n, edges = fixed[name]()
        return SmallGraph.from_edges(n, edges)

    if len(params) != 1:
        raise ValueError(f"{name} takes exactly one integer parameter")
    (t,) = params
    if name in ("cycle", "wheel"):
        if t < 3:
            raise ValueError(f"{name} needs t >= 3, got {t}")
        size = t if name == "cycle" else t + 1
    elif name in ("complete", "empty", "path", "crown"):
        if t < 1:
            raise ValueError(f"{name} needs n >= 1, got {t}")
        size = 2 * t if name == "crown" else t
    else:
        raise ValueError(f"unknown graph name {name!r}")
    if size > MAX_VERTICES:
        raise ValueError(f"{name}({t}) would have {size} > {MAX_VERTICES} vertices")

    if name == "cycle":
        edges = _cycle_edges(t)
    elif name == "wheel":
        edges = _add_hub(t, _cycle_edges(t))
    elif name == "complete":
        edges = list(combinations(range(t), 2))
    elif name == "empty":
        edges = []
    elif name == "path":
        edges = [(i, i + 1) for i in range(t - 1)]
    else:
        edges = [(i, t + j) for i in range(t) for j in range(t) if i != j]
    return SmallGraph.from_edges(size, edges)


_NAME_PATTERNS = [
    (re.compile(r"^C(\d+)$"), "cycle"),
    (re.compile(r"^K(\d+)$"), "complete"),
    (re.compile(r"^E(\d+)$"), "empty"),
    (re.compile(r"^P(\d+)$"), "path"),
    (re.compile(r"^crown(\d+)$"), "crown"),
    (re.compile(r"^W(\d+)$"), "wheel"),
]


def graph_from_name(token: str) -> SmallGraph:
    """Resolve a CLI graph name such as ``F1``, ``C5``, ``K4`` or ``crown6``.

    A leading ``co-`` takes the complement, e.g. ``co-C6``.
    """
    if token.startswith("co-"):
        return complement(graph_from_name(token[3:]))
    if token in ("F1", "F2", "F1p", "F2p", "W5"):
        return make_named(token)
    for pattern, schema in _NAME_PATTERNS:
        match = pattern.match(token)
        if match:
            return make_named(schema, int(match.group(1)))
    raise ValueError(f"unknown graph name {token!r}")


def parse_graph_text(text: str) -> SmallGraph:
    """Parse ``n`` on the first line followed by ``i j`` edge lines (0-based)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty graph text")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            i, j = (int(tok) for tok in ln.split())
            edges.append((i, j))
    except ValueError as exc:
        raise ValueError(f"malformed graph text: {exc}") from None
    return SmallGraph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------

def chromatic_number(G: SmallGraph) -> int:
    if G.n > CHROMATIC_MAX_VERTICES:
        raise BudgetExceeded(f"chromatic_number limited to {CHROMATIC_MAX_VERTICES} vertices")
    if not G.edges:
        return 1
    order = sorted(range(G.n), key=lambda v: -G.degree(v))
    masks = G.masks

    def colorable(k: int) -> bool:
        colors = [-1] * G.n

        def place(idx: int, used: int) -> bool:
            if idx == len(order):
                return True
            v = order[idx]
            # symmetry breaking: at most one fresh color per step
            for c in range(min(used + 1, k)):
                if all(colors[u] != c for u in range(G.n) if masks[v] >> u & 1):
                    colors[v] = c
                    if place(idx + 1, max(used, c + 1)):
                        return True
                    colors[v] = -1
            return False

        return place(0, 0)

    k = 2
    while not colorable(k):
        k += 1
    return k


def is_bipartite(G: SmallGraph) -> bool:
    return chromatic_number(G) <= 2 if G.n <= CHROMATIC_MAX_VERTICES else _bfs_bipartite(G)


def _bfs_bipartite(G: SmallGraph) -> bool:
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in G.neighbors(v):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def _edge_order(G: SmallGraph) -> list[tuple[int, int]]:
    """Edges in BFS order from a max-degree vertex so constraints bite early."""
    seen_v: list[int] = []
    remaining = set(range(G.n))
    while remaining:
        start = max(remaining, key=G.degree)
        queue = [start]
        remaining.discard(start)
        while queue:
            v = queue.pop(0)
            seen_v.append(v)
            for u in sorted(G.neighbors(v), key=lambda w: -G.degree(w)):
                if u in remaining:
                    remaining.discard(u)
                    queue.append(u)
    rank = {v: i for i, v in enumerate(seen_v)}
    return sorted(G.edges, key=lambda e: (max(rank[e[0]], rank[e[1]]), min(rank[e[0]], rank[e[1]])))


def transitive_orientation(G: SmallGraph) -> Optional[dict[tuple[int, int], bool]]:
    """Return a transitive orientation or ``None``.

    The result maps each edge ``(i, j)`` with ``i < j`` to ``True`` when it is
    oriented ``i -> j``. Backtracking over edges; each choice is closed under
    the forcing rule (``x->y`` and ``y~z`` with ``x`` not adjacent to ``z``
    forces ``z->y``).
    """
    if G.m > COMPARABILITY_MAX_EDGES:
        raise BudgetExceeded(f"is_comparability limited to {COMPARABILITY_MAX_EDGES} edges")
    masks = G.masks
    order = _edge_order(G)

    def key(a: int, b: int) -> tuple[tuple[int, int], bool]:
        return ((a, b), True) if a < b else ((b, a), False)

    def assign(orient: dict, a: int, b: int) -> bool:
        """Orient a->b and propagate forced arcs; False on contradiction."""
        stack = [(a, b)]
        while stack:
            x, y = stack.pop()
            e, d = key(x, y)
            if e in orient:
                if orient[e] != d:
                    return False
                continue
            orient[e] = d
            # z ~ y, z not~ x: must have z -> y
            for z in range(G.n):
                if z == x or z == y:
                    continue
                zy = masks[y] >> z & 1
                zx = masks[x] >> z & 1
                if zy and not zx:
                    stack.append((z, y))
                if zx and not zy:
                    stack.append((x, z))
        return True

    def transitive(orient: dict) -> bool:
        out = [0] * G.n
        for (i, j), d in orient.items():
            if d:
                out[i] |= 1 << j
            else:
                out[j] |= 1 << i
        for x in range(G.n):
            for y in range(G.n):
                if out[x] >> y & 1 and out[y] & ~out[x] & ~(1 << x):
                    return False
                if out[x] >> y & 1 and out[y] >> x & 1:
                    return False
        return True

    def search(orient: dict, idx: int) -> Optional[dict]:
        while idx < len(order) and order[idx] in orient:
            idx += 1
        if idx == len(order):
            return orient if transitive(orient) else None
        i, j = order[idx]
        for a, b in ((i, j), (j, i)):
            trial = dict(orient)
            if assign(trial, a, b):
                found = search(trial, idx + 1)
                if found is not None:
                    return found
        return None

    return search({}, 0)


def is_comparability(G: SmallGraph) -> bool:
    return transitive_orientation(G) is not None


def _reaches(out: list[int], src: int, dst: int) -> bool:
    seen = 1 << src
    frontier = out[src]
    while frontier:
        if frontier >> dst & 1:
            return True
        seen |= frontier
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= out[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
    return False


def _shortcut_violation(G: SmallGraph, out: list[int], through: tuple[int, int]) -> bool:
    """True if some directed path using arc ``through`` has adjacent ends but
    a non-adjacent pair on it. Non-edges are permanent, so this prunes."""
    masks = G.masks
    n = G.n
    u, v = through
    # extend backwards from u and forwards from v to enumerate paths through u->v
    inn = [0] * n
    for a in range(n):
        f = out[a]
        while f:
            low = f & -f
            inn[low.bit_length() - 1] |= 1 << a
            f ^= low

    def backward(path: list[int], used: int) -> Iterator[list[int]]:
        yield path
        f = inn[path[0]] & ~used
        while f:
            low = f & -f
            w = low.bit_length() - 1
            f ^= low
            yield from backward([w] + path, used | low)

    def forward(path: list[int], used: int) -> Iterator[list[int]]:
        yield path
        f = out[path[-1]] & ~used
        while f:
            low = f & -f
            w = low.bit_length() - 1
            f ^= low
            yield from forward(path + [w], used | low)

    for head in backward([u], 1 << u):
        used_h = 0
        for w in head:
            used_h |= 1 << w
        for tail in forward([v], used_h | (1 << v)):
            path = head + tail
            if len(path) < 3:
                continue
            a, b = path[0], path[-1]
            if not masks[a] >> b & 1:
                continue
            for x, y in combinations(path, 2):
                if not masks[x] >> y & 1:
                    return True
    return False


def semi_transitive_orientation(G: SmallGraph) -> Optional[list[tuple[int, int]]]:
    """Return the arcs of a semi-transitive orientation, or ``None``.

    Acyclic orientations are enumerated edge by edge; a branch dies as soon as
    it closes a directed cycle or exhibits a shortcut whose path contains a
    non-adjacent pair.
    """
    if G.m > WORD_MAX_EDGES:
        raise BudgetExceeded(f"is_word_representable limited to {WORD_MAX_EDGES} edges")
    order = _edge_order(G)
    out = [0] * G.n
    arcs: list[tuple[int, int]] = []

    def search(idx: int) -> bool:
        if idx == len(order):
            return True
        i, j = order[idx]
        for a, b in ((i, j), (j, i)):
            if _reaches(out, b, a):
                continue
            out[a] |= 1 << b
            arcs.append((a, b))
            if not _shortcut_violation(G, out, (a, b)) and search(idx + 1):
                return True
            out[a] &= ~(1 << b)
            arcs.pop()
        return False

    return list(arcs) if search(0) else None


def is_semi_transitive(G: SmallGraph, arcs: Sequence[tuple[int, int]]) -> bool:
    """Independent check of a full orientation by enumerating all directed paths."""
    out = [0] * G.n
    for a, b in arcs:
        out[a] |= 1 << b
    if sorted((min(a, b), max(a, b)) for a, b in arcs) != sorted(G.edges):
        return False
    for a, b in arcs:
        if _reaches(out, b, a):
            return False

    def paths_from(path: list[int], used: int) -> Iterator[list[int]]:
        yield path
        f = out[path[-1]] & ~used
        while f:
            low = f & -f
            f ^= low
            w = low.bit_length() - 1
            yield from paths_from(path + [w], used | low)

    for s in range(G.n):
        for path in paths_from([s], 1 << s):
            if len(path) < 3 or not out[path[0]] >> path[-1] & 1:
                continue
            for x, y in combinations(range(len(path)), 2):
                if not out[path[x]] >> path[y] & 1:
                    return False
    return True


def is_word_representable(G: SmallGraph) -> bool:
    return semi_transitive_orientation(G) is not None
