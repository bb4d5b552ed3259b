"""Combined sentence similarity: match-and-remove, joint matrix, greedy extraction.

Pipeline for two stop-word-free token sequences:

1. Remove exactly matching word occurrences (multiset semantics) and
   remember how many matched (delta) plus both original lengths (m, n).
2. Score every remaining word pair with a convex combination of string
   similarity and a pluggable word-similarity provider, giving a
   |rest1| x |rest2| joint matrix of values in [0, 1].
3. Greedily pull the largest matrix value, delete its row and column,
   and repeat while the maximum stays positive.
4. Final score: (delta + sum(extracted)) * (m + n) / (2 * m * n),
   clamped into [0, 1].

The joint matrix uses a convex combination rather than a plain sum of the
two word-score matrices so entries (and the final score) respect the
[0, 1] contract and "stop at zero" keeps its meaning.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .stringsim import string_word_sim
from .textprep import TokenSequence

# Contract: symmetric word-pair score in [0, 1].
WordSimilarityProvider = Callable[[str, str], float]


def zero_provider(w1: str, w2: str) -> float:
    """Provider that knows nothing; useful with pure-string weights."""
    return 0.0


@dataclass(frozen=True)
class CombineWeights:
    w_string: float
    w_knowledge: float

    def __post_init__(self):
        if self.w_string < 0.0 or self.w_knowledge < 0.0:
            raise ValueError("combine weights must be nonnegative")
        if self.w_string + self.w_knowledge != 1.0:
            raise ValueError("combine weights must sum to exactly 1")

    @classmethod
    def from_string_weight(cls, w_string: float) -> "CombineWeights":
        if not 0.0 <= w_string <= 1.0:
            raise ValueError(f"w_string must lie in [0, 1], got {w_string}")
        return cls(w_string=w_string, w_knowledge=1.0 - w_string)


EQUAL_WEIGHTS = CombineWeights(0.5, 0.5)
STRING_ONLY = CombineWeights(1.0, 0.0)


@dataclass(frozen=True)
class MatchResult:
    delta: int
    rest1: TokenSequence
    rest2: TokenSequence
    m: int
    n: int


def exact_match_filter(s1: TokenSequence, s2: TokenSequence) -> MatchResult:
    """Remove words occurring in both sequences, multiset-style.

    Each occurrence matches at most one identical occurrence on the other
    side; survivors keep their relative order.
    """
    available = Counter(s2)
    matched: Counter[str] = Counter()
    rest1 = []
    for tok in s1:
        if available[tok] > 0:
            available[tok] -= 1
            matched[tok] += 1
        else:
            rest1.append(tok)
    rest2 = []
    to_drop = Counter(matched)
    for tok in s2:
        if to_drop[tok] > 0:
            to_drop[tok] -= 1
        else:
            rest2.append(tok)
    return MatchResult(delta=sum(matched.values()), rest1=rest1, rest2=rest2,
                       m=len(s1), n=len(s2))


def build_joint_matrix(rest1: TokenSequence, rest2: TokenSequence,
                       provider: WordSimilarityProvider,
                       weights: CombineWeights = EQUAL_WEIGHTS) -> np.ndarray:
    """Weighted word-pair score grid; empty remainders give a zero-dim matrix."""
    mat = np.zeros((len(rest1), len(rest2)))
    ws, wk = weights.w_string, weights.w_knowledge
    for i, a in enumerate(rest1):
        for j, b in enumerate(rest2):
            value = 0.0
            if ws != 0.0:
                value += ws * string_word_sim(a, b)
            if wk != 0.0:
                value += wk * provider(a, b)
            mat[i, j] = value
    return mat


def greedy_extract(mat: np.ndarray) -> list[float]:
    """Repeatedly pop the matrix maximum, deleting its row and column.

    Stops once the maximum drops to zero or a dimension runs out; ties go
    to the lowest row index, then the lowest column index. The returned
    list is nonincreasing.
    """
    mat = np.asarray(mat, dtype=float)
    if mat.size == 0:
        return []
    work = mat.copy()
    rho: list[float] = []
    steps = min(work.shape)
    for _ in range(steps):
        flat = int(np.argmax(work))  # first maximum in row-major order
        i, j = divmod(flat, work.shape[1])
        value = work[i, j]
        if value <= 0.0:
            break
        rho.append(float(value))
        work[i, :] = -math.inf
        work[:, j] = -math.inf
    return rho


def combined_similarity(s1: TokenSequence, s2: TokenSequence,
                        provider: WordSimilarityProvider = zero_provider,
                        weights: CombineWeights = EQUAL_WEIGHTS) -> float:
    """Full match-and-remove sentence score in [0, 1].

    Both sentences empty scores 1.0, exactly one empty scores 0.0; these
    keep the function total for all-stop-word inputs.
    """
    m, n = len(s1), len(s2)
    if m == 0 and n == 0:
        return 1.0
    if m == 0 or n == 0:
        return 0.0
    match = exact_match_filter(s1, s2)
    if match.rest1 and match.rest2:
        rho = greedy_extract(build_joint_matrix(match.rest1, match.rest2,
                                                provider, weights))
    else:
        rho = []
    score = (match.delta + math.fsum(rho)) * (m + n) / (2.0 * m * n)
    return min(1.0, max(0.0, score))
