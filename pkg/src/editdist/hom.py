"""Colored homomorphisms into CRGs and admissibility against forbidden families."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .crg import BLACK, GRAY, WHITE, Crg
from .graphs import MAX_VERTICES, BudgetExceeded, SmallGraph, complement, make_named

DEFAULT_NODE_CAP = 10**8


def _compat_tables(K: Crg) -> tuple[list[int], list[int]]:
    """Bitmasks of CRG vertices b that an edge / non-edge may use next to a."""
    edge_ok = [0] * K.k
    non_ok = [0] * K.k
    for a in range(K.k):
        for b in range(K.k):
            c = K.color(a, b)
            if a == b:
                if c == BLACK:
                    edge_ok[a] |= 1 << b
                else:
                    non_ok[a] |= 1 << b
            else:
                if c in (BLACK, GRAY):
                    edge_ok[a] |= 1 << b
                if c in (WHITE, GRAY):
                    non_ok[a] |= 1 << b
    return edge_ok, non_ok


def find_hom(G: SmallGraph, K: Crg, node_cap: int = DEFAULT_NODE_CAP) -> Optional[list[int]]:
    """Return a colored homomorphism ``phi`` (as a list) or ``None``.

    Vertices of G are placed highest-degree first with forward checking on
    every pair, since each pair (edge or not) constrains its images.
    """
    edge_ok, non_ok = _compat_tables(K)
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    masks = G.masks
    full = (1 << K.k) - 1
    phi = [-1] * G.n
    nodes = 0

    def place(depth: int, domains: dict[int, int]) -> bool:
        nonlocal nodes
        if depth == len(order):
            return True
        u = order[depth]
        dom = domains[u]
        while dom:
            low = dom & -dom
            dom ^= low
            a = low.bit_length() - 1
            nodes += 1
            if nodes > node_cap:
                raise BudgetExceeded(f"homomorphism search exceeded {node_cap} nodes")
            nxt = {}
            dead = False
            for v in order[depth + 1:]:
                allowed = edge_ok[a] if masks[u] >> v & 1 else non_ok[a]
                d = domains[v] & allowed
                if not d:
                    dead = True
                    break
                nxt[v] = d
            if dead:
                continue
            phi[u] = a
            if place(depth + 1, nxt):
                return True
            phi[u] = -1
        return False

    if place(0, {v: full for v in range(G.n)}):
        return list(phi)
    return None


def exists_hom(G: SmallGraph, K: Crg, node_cap: int = DEFAULT_NODE_CAP) -> bool:
    return find_hom(G, K, node_cap) is not None


def is_colored_hom(G: SmallGraph, K: Crg, phi: list[int]) -> bool:
    """Check a candidate map pair by pair against the definition."""
    for u in range(G.n):
        for v in range(u + 1, G.n):
            a, b = phi[u], phi[v]
            c = K.color(a, b)
            if G.has_edge(u, v):
                ok = c == BLACK if a == b else c in (BLACK, GRAY)
            else:
                ok = c == WHITE if a == b else c in (WHITE, GRAY)
            if not ok:
                return False
    return True


# ---------------------------------------------------------------------------
# forbidden families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ForbiddenFamily:
    name: str
    finite_members: tuple[tuple[str, SmallGraph], ...]
    # schema: (label, lengths-for-bound, builder) or None
    schema: Optional[tuple[str, Callable[[int], list[int]], Callable[[int], SmallGraph]]] = field(
        default=None, compare=False)

    def members(self, bound: Optional[int] = None) -> list[tuple[str, SmallGraph]]:
        out = list(self.finite_members)
        if self.schema is not None and bound is not None:
            label, lengths, build = self.schema
            out.extend((f"{label}{t}", build(t)) for t in lengths(bound))
        return out


def word_family() -> ForbiddenFamily:
    return ForbiddenFamily(
        "word", tuple((nm, make_named(nm)) for nm in ("F1", "F2", "W5")))


def kword_family(k: int) -> ForbiddenFamily:
    if k < 2:
        raise ValueError("k-word family defined for k >= 2")
    n = 2 * k + 2
    if 2 * n > MAX_VERTICES:
        raise ValueError(f"crown({n}) exceeds {MAX_VERTICES} vertices")
    members = [("F1", make_named("F1")), ("F2", make_named("F2")),
               (f"crown({n})", make_named("crown", n))]
    return ForbiddenFamily(f"kword:{k}", tuple(members))


def _co_cycle(t: int) -> SmallGraph:
    return complement(make_named("cycle", t))


def comp_family() -> ForbiddenFamily:
    """F1p, F2p and the complements of cycles of length >= 5 (truncated)."""
    return ForbiddenFamily(
        "comp",
        (("F1p", make_named("F1p")), ("F2p", make_named("F2p"))),
        ("co-C", lambda bound: list(range(5, bound + 1)), _co_cycle),
    )


def simplified_comp_family() -> ForbiddenFamily:
    """F1p, F2p and complements of C_t for t = 6, 14, 30, ... (t = 2^l - 2)."""

    def lengths(bound: int) -> list[int]:
        out, l = [], 3
        while (1 << l) - 2 <= bound:
            out.append((1 << l) - 2)
            l += 1
        return out

    return ForbiddenFamily(
        "comp-simplified",
        (("F1p", make_named("F1p")), ("F2p", make_named("F2p"))),
        ("co-C", lengths, _co_cycle),
    )


def family_from_tag(tag: str) -> ForbiddenFamily:
    if tag == "word":
        return word_family()
    if tag == "comp":
        return comp_family()
    if tag.startswith("kword:"):
        return kword_family(int(tag.split(":", 1)[1]))
    raise ValueError(f"unknown family {tag!r}; expected word, kword:<k> or comp")


@dataclass
class AdmissibilityReport:
    family: str
    overall: bool
    witnesses: list[str]
    truncation_bound: Optional[int]

    def to_dict(self) -> dict:
        return {"family": self.family, "overall": self.overall,
                "witnesses": self.witnesses, "truncation_bound": self.truncation_bound}


def truncation_bound(K: Crg) -> int:
    return min(2 * K.k + 2, MAX_VERTICES)


def admissible(K: Crg, family: ForbiddenFamily, node_cap: int = DEFAULT_NODE_CAP,
               stop_at_first: bool = False) -> AdmissibilityReport:
    """Check that no member of ``family`` maps into K.

    Infinite schemas are checked up to ``2|V(K)| + 2`` vertices (capped at the
    small-graph limit), and the bound is reported.
    """
    bound = truncation_bound(K) if family.schema is not None else None
    witnesses = []
    for label, F in family.members(bound):
        if exists_hom(F, K, node_cap):
            witnesses.append(label)
            if stop_at_first:
                break
    return AdmissibilityReport(family.name, not witnesses, witnesses, bound)
