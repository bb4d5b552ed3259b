"""Correlation and classification metrics for benchmark scoring.

Pearson uses compensated (fsum) accumulation so results are stable under
permutation of the inputs; Spearman is defined as Pearson over fractional
average ranks, which handles ties the standard way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .datasets import GoldLabel


@dataclass(frozen=True)
class ScoredPair:
    id: str
    predicted: float
    gold: GoldLabel


def _check_paired(xs: Sequence[float], ys: Sequence[float]) -> None:
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    if len(xs) < 2:
        raise ValueError("need at least two observations")


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Pearson correlation coefficient, clamped into [-1, 1].

    Raises ValueError when either input is constant: r is undefined there
    and silently returning 0 would poison downstream report cells.
    """
    _check_paired(xs, ys)
    # the variance test below cannot be relied on for this: the mean of an
    # all-equal list need not round-trip exactly, leaving a nonzero variance
    if min(xs) == max(xs) or min(ys) == max(ys):
        raise ValueError("correlation undefined for constant input")
    n = len(xs)
    mean_x = math.fsum(xs) / n
    mean_y = math.fsum(ys) / n
    dx = [x - mean_x for x in xs]
    dy = [y - mean_y for y in ys]
    var_x = math.fsum(d * d for d in dx)
    var_y = math.fsum(d * d for d in dy)
    if var_x == 0.0 or var_y == 0.0:
        raise ValueError("correlation undefined for constant input")
    cov = math.fsum(a * b for a, b in zip(dx, dy))
    # divide by each norm separately: the product var_x * var_y can
    # underflow to zero even when both factors are positive
    r = (cov / math.sqrt(var_x)) / math.sqrt(var_y)
    return min(1.0, max(-1.0, r))


def _average_ranks(xs: Sequence[float]) -> list[float]:
    """Fractional ranks (1-based); tied values share the mean of their ranks."""
    order = sorted(range(len(xs)), key=lambda i: xs[i])
    ranks = [0.0] * len(xs)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and xs[order[j + 1]] == xs[order[i]]:
            j += 1
        # positions i..j hold ties; ranks are 1-based
        mean_rank = (i + j + 2) / 2.0
        for k in range(i, j + 1):
            ranks[order[k]] = mean_rank
        i = j + 1
    return ranks


def spearman(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Spearman rank correlation: Pearson over fractional average ranks."""
    _check_paired(xs, ys)
    return pearson(_average_ranks(xs), _average_ranks(ys))


def accuracy(predicted: Sequence[int], gold: Sequence[int]) -> float:
    if len(predicted) != len(gold):
        raise ValueError(f"length mismatch: {len(predicted)} vs {len(gold)}")
    if not predicted:
        raise ValueError("accuracy undefined on empty input")
    hits = sum(1 for p, g in zip(predicted, gold) if p == g)
    return hits / len(predicted)


def calibrate_threshold(pairs: Sequence[ScoredPair]) -> float:
    """Pick the decision threshold maximizing training accuracy.

    Candidates are midpoints between adjacent distinct sorted predictions
    plus the endpoints 0 and 1; prediction is 1 iff score >= threshold.
    Ties prefer the smallest threshold.
    """
    if not pairs:
        raise ValueError("cannot calibrate on an empty training set")
    golds = []
    for p in pairs:
        if p.gold.binary is None:
            raise ValueError(f"pair {p.id} has no binary gold label")
        golds.append(p.gold.binary)
    scores = [p.predicted for p in pairs]
    distinct = sorted(set(scores))
    candidates = {0.0, 1.0}
    for lo, hi in zip(distinct, distinct[1:]):
        candidates.add((lo + hi) / 2.0)
    best_t, best_acc = None, -1.0
    for t in sorted(candidates):
        acc = sum(1 for s, g in zip(scores, golds)
                  if (1 if s >= t else 0) == g) / len(pairs)
        if acc > best_acc:
            best_t, best_acc = t, acc
    return best_t
