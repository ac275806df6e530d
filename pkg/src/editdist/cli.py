"""``edf`` command line entry point."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .crg import Crg, crg_from_token, g_value, is_p_core, make_crg
from .edf import ed_closed_piece
from .editor import estimate_curve
from .graphs import BudgetExceeded, SmallGraph, graph_from_name, parse_graph_text
from .hom import admissible, exists_hom, family_from_tag
from .spectral import path_g, path_weights, reparam, toeplitz_eigs
from .verify import SUITES

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def fmt(v: float) -> str:
    return f"{float(v):.15g}"


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(fmt(obj)) if np.isfinite(obj) else str(float(obj))
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _dump_json(obj: Any) -> str:
    return json.dumps(_jsonable(obj), indent=2) + "\n"


def _dump_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) if isinstance(v, (float, np.floating)) else v for v in row])
    return buf.getvalue()


def _load_crg(spec: str) -> Crg:
    path = Path(spec)
    try:
        if path.is_file():
            return make_crg(path.read_text())
        return crg_from_token(spec)
    except ValueError as exc:
        raise UsageError(f"--crg {spec!r}: {exc}") from exc


def _load_graph(spec: str) -> SmallGraph:
    path = Path(spec)
    try:
        if path.is_file():
            return parse_graph_text(path.read_text())
        return graph_from_name(spec)
    except ValueError as exc:
        raise UsageError(f"--graph {spec!r}: {exc}") from exc


def _probability(text: str) -> float:
    try:
        p = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0.0 <= p <= 1.0:
        raise argparse.ArgumentTypeError(f"p={p} outside [0, 1]")
    return p


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


# subcommand handlers return (text, exit code)

def cmd_curve(a) -> tuple[str, int]:
    if a.pmin > a.pmax:
        raise UsageError("--pmin must not exceed --pmax")
    rows = []
    for p in np.linspace(a.pmin, a.pmax, a.steps):
        v, label = ed_closed_piece(a.property, float(p))
        rows.append((float(p), v, label))
    if a.json:
        return _dump_json([{"p": p, "ed": v, "piece": s} for p, v, s in rows]), EXIT_OK
    return _dump_csv(("p", "ed", "piece"), rows), EXIT_OK


def cmd_gk(a) -> tuple[str, int]:
    K = _load_crg(a.crg)
    sol = g_value(K, a.p)
    if a.json:
        return _dump_json({"g": sol.g, "weights": sol.x, "support": list(sol.support),
                           "kkt_residual": sol.kkt_residual}), EXIT_OK
    return _dump_csv(("vertex", "weight"), [(i, float(w)) for i, w in enumerate(sol.x)]) \
        + f"# g={fmt(sol.g)}\n", EXIT_OK


def cmd_pcore(a) -> tuple[str, int]:
    K = _load_crg(a.crg)
    result = is_p_core(K, a.p)
    if a.json:
        return _dump_json({"p_core": result, "g": g_value(K, a.p).g}), EXIT_OK
    return f"{str(result).lower()}\n", EXIT_OK


def cmd_hom(a) -> tuple[str, int]:
    result = exists_hom(_load_graph(a.graph), _load_crg(a.crg))
    if a.json:
        return _dump_json({"hom": result}), EXIT_OK
    return f"{str(result).lower()}\n", EXIT_OK


def cmd_admissible(a) -> tuple[str, int]:
    try:
        family = family_from_tag(a.family)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = admissible(_load_crg(a.crg), family)
    return _dump_json(report.to_dict()), EXIT_OK


def cmd_eigs(a) -> tuple[str, int]:
    pairs = toeplitz_eigs(a.k, reparam(a.p)) if a.p < 1 else None
    if pairs is None:
        raise UsageError("p must be < 1")
    if a.json:
        return _dump_json([{"a": e.a, "lambda": e.lam, "wdot1": e.wdot1} for e in pairs]), EXIT_OK
    return _dump_csv(("a", "lambda", "wdot1"), [(e.a, e.lam, e.wdot1) for e in pairs]), EXIT_OK


def cmd_pathg(a) -> tuple[str, int]:
    try:
        g, x = path_g(a.k, a.p), path_weights(a.k, a.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return _dump_json({"k": a.k, "p": a.p, "g": g, "weights": x}), EXIT_OK


def cmd_simulate(a) -> tuple[str, int]:
    try:
        points = estimate_curve(a.property, a.n, a.p, a.trials, a.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    certified = all(pt.all_certified for pt in points)
    code = EXIT_OK if certified else EXIT_FAIL
    if a.json:
        return _dump_json([dict(pt._asdict(), trials=a.trials, n=a.n) for pt in points]), code
    rows = [(pt.p, pt.mean_fraction, pt.closed_form, a.trials, a.n) for pt in points]
    return _dump_csv(("p", "mean_fraction", "closed_form", "trials", "n"), rows), code


def cmd_verify(a) -> tuple[str, int]:
    report = SUITES[a.suite]()
    code = EXIT_OK if report.overall else EXIT_FAIL
    if a.json:
        return _dump_json(report.to_dict()), code
    lines = []
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        exp = fmt(c.expected) if isinstance(c.expected, float) else str(c.expected).lower()
        obs = fmt(c.observed) if isinstance(c.observed, float) else str(c.observed).lower()
        lines.append(f"{status} {c.check_id}  expected={exp} observed={obs} tol={c.tolerance:g}  [{c.label}]")
    n_pass = sum(c.passed for c in report.checks)
    lines.append(f"suite {report.suite}: {n_pass}/{len(report.checks)} checks passed, "
                 f"overall {'PASS' if report.overall else 'FAIL'}")
    return "\n".join(lines) + "\n", code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edf", description="Edit distance functions for "
                                     "word-representability and comparability.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(fn=fn)
        sp.add_argument("--out", help="output path (default: stdout)")
        sp.add_argument("--json", action="store_true", help="emit JSON where CSV/text is the default")
        return sp

    sp = add("curve", cmd_curve, "closed-form edit distance curve")
    sp.add_argument("--property", required=True, help="word | kword[:k] | comp")
    sp.add_argument("--pmin", type=_probability, default=0.0)
    sp.add_argument("--pmax", type=_probability, default=1.0)
    sp.add_argument("--steps", type=_positive, default=101)

    sp = add("gk", cmd_gk, "g_K(p) and optimal weights")
    sp.add_argument("--crg", required=True, help="CRG file or Krs:r,s | Path:k | Cycle:k")
    sp.add_argument("--p", type=_probability, required=True)

    sp = add("pcore", cmd_pcore, "test whether a CRG is p-core")
    sp.add_argument("--crg", required=True)
    sp.add_argument("--p", type=_probability, required=True)

    sp = add("hom", cmd_hom, "decide whether a graph maps into a CRG")
    sp.add_argument("--graph", required=True, help="graph file or name (F1, C5, co-C6, ...)")
    sp.add_argument("--crg", required=True)

    sp = add("admissible", cmd_admissible, "admissibility report for a forbidden family")
    sp.add_argument("--crg", required=True)
    sp.add_argument("--family", required=True, help="word | kword:<k> | comp")

    sp = add("eigs", cmd_eigs, "eigenpairs of the tridiagonal Toeplitz matrix")
    sp.add_argument("--k", type=_positive, required=True)
    sp.add_argument("--p", type=_probability, required=True)

    sp = add("pathg", cmd_pathg, "closed-form g and weights of the k-vertex path CRG")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--p", type=_probability, required=True)

    sp = add("simulate", cmd_simulate, "Monte Carlo editing of G(n, p)")
    sp.add_argument("--property", required=True, choices=("word", "comp"))
    sp.add_argument("--n", type=_positive, default=400)
    sp.add_argument("--p", type=_probability, nargs="+", required=True)
    sp.add_argument("--trials", type=_positive, default=20)
    sp.add_argument("--seed", type=int, default=7)

    sp = add("verify", cmd_verify, "run a reproduction suite")
    sp.add_argument("--suite", required=True, choices=tuple(SUITES))
    return parser


def _check_threads() -> None:
    raw = os.environ.get("EDF_THREADS")
    if raw is None:
        return
    try:
        if int(raw) < 1:
            raise ValueError
    except ValueError:
        raise UsageError(f"EDF_THREADS must be a positive integer, got {raw!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        _check_threads()
        text, code = args.fn(args)
    except (UsageError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"edf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArithmeticError, BudgetExceeded) as exc:
        print(f"edf: {args.command} failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
