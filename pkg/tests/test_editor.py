import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from editdist.crg import g_value, path_crg
from editdist.editor import (
    Coloring, DenseGraph, LayerOrder, comp_weights, edit_complete, edit_layered,
    edit_word_threecolor, estimate_curve, expected_layered_fraction, sample_gnp, stream,
)
from editdist.spectral import path_weights


def test_sampler_extremes():
    assert sample_gnp(100, 0.0, 1).edge_count() == 0
    assert sample_gnp(100, 1.0, 1).edge_count() == 4950


def test_sampler_density():
    assert abs(sample_gnp(1000, 0.5, 42).density() - 0.5) <= 0.01


def test_sampler_rejects():
    with pytest.raises(ValueError):
        sample_gnp(0, 0.5, 1)
    with pytest.raises(ValueError):
        sample_gnp(10, 1.5, 1)
    with pytest.raises(ValueError):
        DenseGraph(np.ones((3, 3), dtype=bool))


def test_streams_are_independent_and_reproducible():
    a = stream(7, 0, "x").random(5)
    assert np.array_equal(a, stream(7, 0, "x").random(5))
    assert not np.array_equal(a, stream(7, 1, "x").random(5))
    assert not np.array_equal(a, stream(7, 0, "y").random(5))
    assert not np.array_equal(a, stream(8, 0, "x").random(5))


def test_determinism():
    G = sample_gnp(120, 0.6, 5, 3)
    assert G == sample_gnp(120, 0.6, 5, 3)
    r1, r2 = edit_word_threecolor(G, 5, 3), edit_word_threecolor(G, 5, 3)
    assert (r1.added, r1.deleted, r1.fraction) == (r2.added, r2.deleted, r2.fraction)
    assert r1.edited == r2.edited


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 120), st.floats(0, 1), st.integers(0, 10**6))
def test_certificates_verify(n, p, seed):
    G = sample_gnp(n, p, seed)
    for r in (edit_word_threecolor(G, seed), edit_complete(G),
              edit_layered(G, path_weights(5, 2 / 3), seed), edit_layered(G, [0.5, 0.5], seed)):
        assert r.verify()
        diff = np.triu(G.adjacency() ^ r.edited.adjacency(), 1).sum()
        assert diff == r.added + r.deleted
        assert r.fraction == pytest.approx(diff / G.pairs)


def test_certificates_reject_bad_outputs():
    G = DenseGraph.complete(4)
    assert not Coloring(np.array([0, 0, 1, 2])).verify(G)
    # a path a-b-c with layers 0,1,2 but missing a-c is not transitive
    A = np.zeros((3, 3), dtype=bool)
    A[0, 1] = A[1, 0] = A[1, 2] = A[2, 1] = True
    assert not LayerOrder(np.array([0, 1, 2])).verify(DenseGraph(A))
    assert LayerOrder(np.array([0, 1, 0])).verify(DenseGraph(A))


def test_layered_rejects_bad_weights():
    G = sample_gnp(10, 0.5, 1)
    with pytest.raises(ValueError):
        edit_layered(G, [0.7, 0.7], 1)
    with pytest.raises(ValueError):
        edit_layered(G, [1.2, -0.2], 1)


def test_expected_fraction_is_quadratic_form():
    for k, p in [(3, 0.6), (4, 0.65), (5, 2 / 3)]:
        x = g_value(path_crg(k), p).x
        assert expected_layered_fraction(x, p) == pytest.approx(g_value(path_crg(k), p).g, abs=1e-12)
    assert expected_layered_fraction([1.0], 0.3) == pytest.approx(0.3)
    assert comp_weights(0.8) is None
    np.testing.assert_allclose(comp_weights(0.4), [0.5, 0.5])


def test_expected_fraction_matches_empirical():
    w = path_weights(4, 0.65)
    fr = [edit_layered(sample_gnp(300, 0.65, 11, t), w, 11, t).fraction for t in range(10)]
    assert np.mean(fr) == pytest.approx(expected_layered_fraction(w, 0.65), abs=0.01)


@pytest.mark.parametrize("prop,p,target,recipe", [
    ("word", 0.6, 0.2, "threecolor"),
    ("comp", 0.4, 0.2, "layered:2"),
    ("word", 0.9, 0.1, "complete"),
])
def test_estimate_curve_examples(prop, p, target, recipe):
    (pt,) = estimate_curve(prop, 400, [p], 20, 7)
    assert pt.mean_fraction == pytest.approx(target, abs=0.01)
    assert pt.recipe == recipe and pt.all_certified
    # recipes are feasible edits, so the mean upper-bounds the closed form statistically
    assert pt.mean_fraction >= pt.closed_form - 3 * pt.std / np.sqrt(20) - 1e-3


def test_estimate_curve_rejects():
    with pytest.raises(ValueError):
        estimate_curve("kword", 50, [0.5], 2, 1)
    with pytest.raises(ValueError):
        estimate_curve("word", 50, [0.5], 0, 1)
