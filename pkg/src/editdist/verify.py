"""Executable reproduction suites behind ``edf verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import crg as crgmod
from .crg import cycle_crg, from_gray_graph, g_value, is_p_core, k_rs, path_crg
from .edf import comp_k, ed_closed, envelope, max_point
from .editor import edit_layered, edit_word_threecolor, sample_gnp
from .graphs import complement, make_named
from .hom import admissible, comp_family, exists_hom, kword_family, word_family
from .spectral import path_g, path_weights, reparam, transition_point, transition_value
from .tables import EXACT_TRANSITIONS, PATH_G_ROWS, PATH_WEIGHT_ROWS, ROUNDED_TRANSITIONS


@dataclass
class Check:
    check_id: str
    label: str
    expected: object
    observed: object
    tolerance: float
    passed: bool


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def numeric(self, check_id: str, label: str, expected: float, observed: float, tol: float) -> None:
        ok = bool(np.isfinite(observed) and abs(expected - observed) <= tol)
        self.checks.append(Check(check_id, label, float(expected), float(observed), tol, ok))

    def boolean(self, check_id: str, label: str, expected: bool, observed: bool) -> None:
        self.checks.append(Check(check_id, label, expected, observed, 0.0, expected == observed))

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "overall": self.overall,
            "checks": [
                {"id": c.check_id, "label": c.label, "expected": c.expected,
                 "observed": c.observed, "tolerance": c.tolerance, "pass": c.passed}
                for c in self.checks
            ],
        }


def window_samples(k: int, fractions=(0.1, 0.3, 0.5, 0.7, 1.0)) -> list[float]:
    lo, hi = transition_point(k), transition_point(k + 1)
    return [lo + f * (hi - lo) for f in fractions]


def suite_rational_rows() -> VerificationReport:
    rep = VerificationReport("appendix-b")
    for k, row in PATH_G_ROWS.items():
        for p in window_samples(k):
            label = f"g of path CRG k={k} against its rational row"
            rep.numeric(f"gk-qp:{k}:{p:.6f}", label, row(p), g_value(path_crg(k), p).g, 1e-9)
            rep.numeric(f"gk-closed:{k}:{p:.6f}", label, row(p), path_g(k, p), 1e-9)
    for k, row in PATH_WEIGHT_ROWS.items():
        for p in window_samples(k):
            want = np.array(row(p))
            label = f"optimal weights of path CRG k={k} against their rational row"
            got_qp = g_value(path_crg(k), p).x
            got_cf = path_weights(k, p)
            rep.numeric(f"x-qp:{k}:{p:.6f}", label, 0.0, float(np.abs(got_qp - want).max()), 1e-9)
            rep.numeric(f"x-closed:{k}:{p:.6f}", label, 0.0, float(np.abs(got_cf - want).max()), 1e-9)
    return rep


def suite_transitions() -> VerificationReport:
    rep = VerificationReport("transitions")
    for k, v in EXACT_TRANSITIONS.items():
        rep.numeric(f"pk-exact:{k}", "closed-form transition point", v, transition_point(k), 1e-12)
    for k, v in ROUNDED_TRANSITIONS.items():
        rep.numeric(f"pk-6dp:{k}", "transition point to six decimals", v, round(transition_point(k), 6), 1e-12)
    for k in range(3, 11):
        pk = transition_point(k)
        want = transition_value(k)
        rep.numeric(f"cont-left:{k}", "g of P_{k-1} just below p_k", want, path_g(k - 1, pk - 1e-9), 1e-9)
        rep.numeric(f"cont-right:{k}", "g of P_k just above p_k", want, path_g(k, pk + 1e-9), 1e-9)
    for k in range(3, 9):
        pk = transition_point(k)
        x = path_weights(k - 1, pk - 1e-9)
        y = path_weights(k, pk + 1e-9)
        padded = np.concatenate([[0.0], x, [0.0]])
        avg = 0.5 * (padded[:-1] + padded[1:])
        rep.numeric(f"avg:{k}", "new weights average adjacent old weights", 0.0,
                    float(np.abs(y - avg).max()), 1e-6)
        rep.numeric(f"x1:{k}", "end weight at transition", (2 - reparam(pk)) / (k + 1), x[0], 1e-6)
    for k in range(3, 9):
        pk, pk1 = transition_point(k), transition_point(k + 1)
        for f in (0.25, 0.5, 1.0):
            p = pk + f * (pk1 - pk)
            rep.boolean(f"pcore-in:{k}:{f}", "path CRG is p-core inside its window", True, is_p_core(path_crg(k), p))
        rep.boolean(f"pcore-below:{k}", "path CRG not p-core below p_k", False, is_p_core(path_crg(k), pk - 0.01))
    for k in range(4, 11):
        for p in (0.75, 0.8, 0.9):
            rep.numeric(f"cycle:{k}:{p}", "gray-cycle CRG value", 1 - p + (4 * p - 3) / k,
                        g_value(cycle_crg(k), p).g, 1e-9)
    return rep


def _claw_crg(k: int) -> crgmod.Crg:
    return from_gray_graph(k, [(0, 1), (0, 2), (0, 3)])


def _cycle_plus(t: int, k: int) -> crgmod.Crg:
    return from_gray_graph(k, [(i, (i + 1) % t) for i in range(t)])


def suite_embeddings() -> VerificationReport:
    rep = VerificationReport("embeddings")
    G = make_named
    cases = [
        ("word-a", "F1 into K(1,1)", G("F1"), k_rs(1, 1)),
        ("word-b", "F2 into K(0,2)", G("F2"), k_rs(0, 2)),
        ("word-c", "W5 into K(4,0)", G("W5"), k_rs(4, 0)),
        ("word-d", "F1 into 5 white vertices with gray claw", G("F1"), _claw_crg(5)),
        ("comp-a", "F1p into K(1,1)", G("F1p"), k_rs(1, 1)),
        ("comp-b", "F2p into K(0,2)", G("F2p"), k_rs(0, 2)),
        ("comp-c", "F1p into 4 white vertices with gray claw", G("F1p"), _claw_crg(4)),
    ]
    for t in (3, 4, 5):
        cases.append((f"word-e:{t}", f"W5 into gray C{t} plus a vertex", G("W5"), _cycle_plus(t, t + 1)))
        cases.append((f"comp-d:{t}", f"C5 into gray C{t}", G("cycle", 5), _cycle_plus(t, t)))
    for t in range(5, 11):
        cases.append((f"comp-e:{t}", f"co-C{t} into gray C{t}", complement(G("cycle", t)), cycle_crg(t)))
    for cid, label, F, K in cases:
        rep.boolean(cid, label, True, exists_hom(F, K))
    rep.boolean("neg:W5-K30", "W5 does not map into K(3,0)", False, exists_hom(G("W5"), k_rs(3, 0)))
    rep.boolean("neg:F1-P5", "F1 does not map into the 5-vertex path CRG", False, exists_hom(G("F1"), path_crg(5)))
    for j in range(5, 13):
        for k in range(3, 13):
            want = math.ceil(j / 2) <= k <= j
            rep.boolean(f"window:{j}:{k}", "co-C_j into gray C_k iff ceil(j/2) <= k <= j",
                        want, exists_hom(complement(G("cycle", j)), cycle_crg(k)))
    return rep


def suite_envelope(steps: int = 1000, comp_stride: int = 5) -> VerificationReport:
    """Envelope checks on a ``steps``-point grid. The comparability cross-check
    is the expensive one (exact QP on path CRGs up to 14 vertices), so it uses
    every ``comp_stride``-th grid point up to 0.74."""
    rep = VerificationReport("envelope")
    grid = list(np.linspace(0.0, 1.0, steps))
    libs = {"word": {"K(3,0)": k_rs(3, 0), "K(0,1)": k_rs(0, 1)},
            "kword": {"K(1,0)": k_rs(1, 0), "K(0,1)": k_rs(0, 1)}}
    for prop, lib in libs.items():
        env = envelope(list(lib.values()), grid)
        err = max(abs(v - ed_closed(prop, p)) for p, v, _ in env)
        rep.numeric(f"env:{prop}", f"{prop} envelope equals closed form", 0.0, err, 1e-9)
    comp_grid = [p for p in grid if p <= 0.74][::comp_stride]
    kmax = comp_k(max(comp_grid))
    libs["comp"] = {f"Path:{k}": path_crg(k) for k in range(2, kmax + 1)} | {"K(0,1)": k_rs(0, 1)}
    env = envelope(list(libs["comp"].values()), comp_grid)
    err = max(abs(v - ed_closed("comp", p)) for p, v, _ in env)
    rep.numeric("env:comp", f"comp envelope of path CRGs 2..{kmax} equals closed form (p <= 0.74)",
                0.0, err, 1e-9)
    families = {"word": word_family(), "kword": kword_family(2), "comp": comp_family()}
    for prop, lib in libs.items():
        for name, K in lib.items():
            rep.boolean(f"admissible:{prop}:{name}", f"library CRG admissible for {prop}",
                        True, admissible(K, families[prop], stop_at_first=True).overall)
    for prop, (ps, vs) in (("word", (0.75, 0.25)), ("kword", (0.5, 0.5)), ("comp", (2 / 3, 5 / 18))):
        p_star, v_star = max_point(prop)
        rep.numeric(f"max-p:{prop}", "maximiser", ps, p_star, 1e-15)
        rep.numeric(f"max-v:{prop}", "maximum", vs, v_star, 1e-15)
        rep.numeric(f"max-ed:{prop}", "closed form at the maximiser", vs, ed_closed(prop, p_star), 1e-12)
    return rep


def suite_simulate(n: int = 400, trials: int = 20, seed: int = 7) -> VerificationReport:
    rep = VerificationReport("simulate")
    layered, colored, certified = [], [], True
    for t in range(trials):
        r = edit_layered(sample_gnp(n, 2 / 3, seed, t), path_weights(5, 2 / 3), seed, t)
        layered.append(r.fraction)
        certified &= r.verify()
        r = edit_word_threecolor(sample_gnp(n, 0.6, seed, t, purpose="gnp-word"), seed, t)
        colored.append(r.fraction)
        certified &= r.verify()
    rep.numeric("mc:layered", "layered recipe at p=2/3 with 5-vertex path weights",
                5 / 18, float(np.mean(layered)), 0.01)
    rep.numeric("mc:threecolor", "three-coloring recipe at p=0.6", 0.2, float(np.mean(colored)), 0.01)
    rep.boolean("mc:certificates", "every trial certificate verifies", True, bool(certified))
    return rep


SUITES: dict[str, Callable[[], VerificationReport]] = {
    "appendix-b": suite_rational_rows,
    "transitions": suite_transitions,
    "embeddings": suite_embeddings,
    "envelope": suite_envelope,
    "simulate": suite_simulate,
}
