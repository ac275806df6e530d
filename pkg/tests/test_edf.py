import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from editdist.crg import k_rs, path_crg
from editdist.edf import comp_k, ed_closed, ed_closed_piece, envelope, max_point, piecewise
from editdist.spectral import path_g, transition_point

GRID = np.linspace(0.0, 1.0, 1000)


def test_envelope_examples():
    lib = [k_rs(3, 0), k_rs(0, 1)]
    (p, v, arg), = envelope(lib, [0.6])
    assert v == pytest.approx(0.2) and arg == 0
    (p, v, arg), = envelope(lib, [0.9])
    assert v == pytest.approx(0.1) and arg == 1
    (p, v, arg), = envelope(lib, [0.75])
    assert v == pytest.approx(0.25) and arg == 0
    with pytest.raises(ValueError):
        envelope([], [0.5])


@pytest.mark.parametrize("prop,lib", [
    ("word", [k_rs(3, 0), k_rs(0, 1)]),
    ("kword", [k_rs(1, 0), k_rs(0, 1)]),
])
def test_envelope_matches_closed_form(prop, lib):
    for p, v, _ in envelope(lib, GRID):
        assert v == pytest.approx(ed_closed(prop, p), abs=1e-9)


def test_comp_envelope_of_path_crgs():
    grid = [p for p in GRID if p <= 0.74][::3]
    lib = [path_crg(k) for k in range(2, comp_k(max(grid)) + 1)] + [k_rs(0, 1)]
    for p, v, _ in envelope(lib, grid):
        assert v == pytest.approx(ed_closed("comp", p), abs=1e-9)


def test_closed_forms():
    assert ed_closed("word", 0.6) == pytest.approx(0.2)
    assert ed_closed("word", 0.9) == pytest.approx(0.1)
    assert ed_closed("kword:3", 0.3) == pytest.approx(0.3)
    assert ed_closed("comp", 0.4) == pytest.approx(0.2)
    assert ed_closed("comp", 2 / 3) == pytest.approx(5 / 18, abs=1e-12)
    assert ed_closed("comp", 0.75) == pytest.approx(0.25)
    assert ed_closed_piece("comp", 0.65) == (pytest.approx(path_g(4, 0.65)), "path:4")
    assert ed_closed_piece("word", 0.8)[1] == "1-p"
    with pytest.raises(ValueError):
        ed_closed("planar", 0.5)
    with pytest.raises(ValueError):
        ed_closed("word", 1.2)


def test_max_points():
    assert max_point("word") == (0.75, 0.25)
    assert max_point("kword") == (0.5, 0.5)
    assert max_point("comp") == (2 / 3, 5 / 18)
    for prop in ("word", "kword", "comp"):
        p_star, v = max_point(prop)
        assert max(ed_closed(prop, p) for p in GRID) <= v + 1e-12
        assert ed_closed(prop, p_star) == pytest.approx(v, abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(st.floats(0.0, 0.7499, allow_nan=False))
def test_comp_k_is_least_index(p):
    k = comp_k(p)
    assert p <= transition_point(k + 1) + 1e-15
    assert k == 2 or p > transition_point(k)


@pytest.mark.parametrize("prop", ["word", "kword", "comp"])
def test_piecewise_covers_and_agrees(prop):
    pw = piecewise(prop)
    for p in GRID:
        assert pw(p) == pytest.approx(ed_closed(prop, p), abs=1e-12)
    assert piecewise(prop).pieces[0].lo == 0.0 and piecewise(prop).pieces[-1].hi == 1.0


def test_comp_concave():
    v = np.array([ed_closed("comp", p) for p in GRID])
    assert (v[1:-1] >= 0.5 * (v[:-2] + v[2:]) - 1e-9).all()
    for p1, p2 in [(0.1, 0.9), (0.5, 0.74), (0.62, 0.7)]:
        assert ed_closed("comp", (p1 + p2) / 2) >= 0.5 * (ed_closed("comp", p1) + ed_closed("comp", p2)) - 1e-9


def test_comp_continuous_at_transitions():
    for k in range(3, 40):
        pk = transition_point(k)
        assert ed_closed("comp", pk - 1e-12) == pytest.approx(ed_closed("comp", pk + 1e-12), abs=1e-9)


def test_near_maximum_window():
    eps = 0.0005
    fine = np.linspace(0.0, 1.0, 20001)
    for p in fine:
        if ed_closed("comp", p) >= 5 / 18 - eps:
            assert 2 / 3 - math.sqrt(2 * eps) < p < 2 / 3 + 12 * eps


def test_piece_bounds():
    for p in np.linspace(transition_point(4), 2 / 3, 200)[1:]:
        assert path_g(4, p) <= 5 / 18 - 0.5 * (2 / 3 - p) ** 2 + 1e-12
    for p in np.linspace(2 / 3, transition_point(6), 200)[1:]:
        assert path_g(5, p) <= 5 / 18 - (p - 2 / 3) / 12 + 1e-12
