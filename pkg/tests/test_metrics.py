import math
import random

import pytest
import scipy.stats
from hypothesis import given, settings
from hypothesis import strategies as st

from textsim.datasets import GoldLabel
from textsim.metrics import (ScoredPair, accuracy, calibrate_threshold,
                             pearson, spearman)

floats = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False,
                   allow_infinity=False)


def paired_lists(min_size=2, max_size=40):
    return st.lists(st.tuples(floats, floats), min_size=min_size,
                    max_size=max_size).map(lambda ps: tuple(zip(*ps)))


# --- pearson -----------------------------------------------------------

def test_pearson_known_value():
    assert pearson([1, 2, 3], [1, 2, 4]) == pytest.approx(0.9819805060619659,
                                                          abs=1e-12)


def test_pearson_perfect_and_inverse():
    assert pearson([1, 2, 3], [10, 20, 30]) == pytest.approx(1.0)
    assert pearson([1, 2, 3], [3, 2, 1]) == pytest.approx(-1.0)


def test_pearson_errors():
    with pytest.raises(ValueError, match="constant"):
        pearson([1, 1, 1], [1, 2, 3])
    with pytest.raises(ValueError, match="two observations"):
        pearson([1], [2])
    with pytest.raises(ValueError, match="mismatch"):
        pearson([1, 2], [1, 2, 3])


def test_pearson_survives_variance_underflow():
    # each variance is ~1e-220; their product would underflow to zero
    v = 2.1262859363900584e-110
    assert pearson([0.0, v], [v, 0.0]) == -1.0
    assert pearson([0.0, v], [0.0, v]) == 1.0


def test_pearson_constant_despite_mean_rounding():
    # the mean of three equal values need not round-trip to the value
    # itself, so constancy must not be inferred from computed variance
    y = 349526.24717124354
    assert (3 * y) / 3 != y  # the trap this guards against
    with pytest.raises(ValueError, match="constant"):
        pearson([0.0, 0.0, 1.0], [y, y, y])
    with pytest.raises(ValueError, match="constant"):
        spearman([y, y, y], [0.0, 0.0, 1.0])


def _well_spread(vs):
    # near-constant lists are cancellation-dominated: mean subtraction
    # leaves deviations of rounding noise, where any two correct
    # implementations may disagree arbitrarily
    scale = max(abs(v) for v in vs)
    return scale == 0.0 or (max(vs) - min(vs)) >= 1e-5 * scale


@given(paired_lists())
@settings(max_examples=200)
def test_pearson_matches_scipy(data):
    xs, ys = data
    if not (_well_spread(xs) and _well_spread(ys)):
        return
    try:
        ours = pearson(xs, ys)
    except ValueError:
        return  # constant input; scipy returns nan there
    ref = scipy.stats.pearsonr(xs, ys).statistic
    assert ours == pytest.approx(ref, abs=1e-9)
    assert -1.0 <= ours <= 1.0


@given(paired_lists(), st.floats(min_value=0.01, max_value=100),
       st.floats(min_value=-50, max_value=50))
@settings(max_examples=100)
def test_pearson_affine_invariance(data, a, b):
    xs, ys = data
    # a*x + b quantizes away the property when the scaled spread sits in
    # the last digits of b (worst case: a constant list)
    spread = a * (max(xs) - min(xs))
    if spread <= 1e-6 * (abs(b) + a * max(abs(x) for x in xs)):
        return
    try:
        base = pearson(xs, ys)
    except ValueError:
        return
    scaled = pearson([a * x + b for x in xs], ys)
    assert scaled == pytest.approx(base, abs=1e-6)


# --- spearman ----------------------------------------------------------

def test_spearman_worked_example():
    # one swapped pair among five ranks: rho = 1 - 6*2/(5*24) = 0.9
    xs = [1, 2, 3, 4, 5]
    ys = [1, 2, 4, 3, 5]
    assert spearman(xs, ys) == pytest.approx(0.9, abs=1e-12)


def test_spearman_regression_value():
    xs = [86, 97, 99, 100, 101, 103, 106, 110, 112, 113]
    ys = [2, 20, 28, 27, 50, 29, 7, 17, 6, 12]
    ref = scipy.stats.spearmanr(xs, ys).statistic
    assert spearman(xs, ys) == pytest.approx(ref, abs=1e-12)


def test_spearman_with_ties_matches_scipy():
    xs = [1, 2, 2, 3]
    ys = [1, 3, 2, 4]
    ref = scipy.stats.spearmanr(xs, ys).statistic
    assert spearman(xs, ys) == pytest.approx(ref, abs=1e-12)


@given(paired_lists(max_size=30))
@settings(max_examples=200)
def test_spearman_matches_scipy(data):
    xs, ys = data
    try:
        ours = spearman(xs, ys)
    except ValueError:
        return
    ref = scipy.stats.spearmanr(xs, ys).statistic
    if math.isnan(ref):
        return
    assert ours == pytest.approx(ref, abs=1e-9)


@given(paired_lists(max_size=20))
@settings(max_examples=100)
def test_spearman_monotone_invariance(data):
    xs, ys = data
    try:
        base = spearman(xs, ys)
    except ValueError:
        return
    # a strictly increasing transform preserves ranks exactly
    assert spearman([math.atan(x) for x in xs], ys) == pytest.approx(
        base, abs=1e-9)


# --- accuracy ----------------------------------------------------------

def test_accuracy():
    assert accuracy([1, 0, 1, 1], [1, 0, 0, 1]) == 0.75
    assert accuracy([0], [0]) == 1.0
    with pytest.raises(ValueError):
        accuracy([], [])
    with pytest.raises(ValueError):
        accuracy([1, 0], [1])


# --- threshold calibration ---------------------------------------------

def _pairs(scores, golds):
    return [ScoredPair(str(i), s, GoldLabel(binary=g))
            for i, (s, g) in enumerate(zip(scores, golds))]


def test_calibrate_separable():
    t = calibrate_threshold(_pairs([0.2, 0.4, 0.6, 0.8], [0, 0, 1, 1]))
    assert t == 0.5


def test_calibrate_prefers_smallest_winner():
    # all gold 1: predicting everything positive is optimal, and the
    # smallest such threshold is 0
    assert calibrate_threshold(_pairs([0.3, 0.7], [1, 1])) == 0.0


def test_calibrate_all_negative():
    # threshold above the largest score classifies all as 0
    t = calibrate_threshold(_pairs([0.3, 0.7], [0, 0]))
    scores = [0.3, 0.7]
    assert all((1 if s >= t else 0) == 0 for s in scores)


def test_calibrate_errors():
    with pytest.raises(ValueError):
        calibrate_threshold([])
    with pytest.raises(ValueError, match="binary"):
        calibrate_threshold([ScoredPair("x", 0.5, GoldLabel(score=3.0))])


@given(st.lists(st.tuples(st.floats(min_value=0, max_value=1,
                                    allow_nan=False),
                          st.integers(min_value=0, max_value=1)),
                min_size=1, max_size=25))
@settings(max_examples=200)
def test_calibrate_is_optimal(items):
    scores = [s for s, _ in items]
    golds = [g for _, g in items]
    t = calibrate_threshold(_pairs(scores, golds))

    def acc_at(thr):
        return sum(1 for s, g in zip(scores, golds)
                   if (1 if s >= thr else 0) == g) / len(items)

    best = acc_at(t)
    # no threshold anywhere beats it: scan a fine grid plus the scores
    # themselves and tiny offsets around them
    probes = {0.0, 1.0}
    for s in scores:
        probes.update((s, max(0.0, s - 1e-9), min(1.0, s + 1e-9)))
    probes.update(i / 97 for i in range(98))
    assert all(acc_at(p) <= best + 1e-12 for p in probes)
    # smallest maximizer among its own candidate set
    distinct = sorted(set(scores))
    cands = {0.0, 1.0} | {(a + b) / 2 for a, b in zip(distinct, distinct[1:])}
    assert t == min(c for c in sorted(cands) if acc_at(c) == best)
