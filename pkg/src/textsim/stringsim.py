"""Word-to-word string similarity from three longest-common-subsequence variants.

Each variant's length is normalized as len**2 / (len(a) * len(b)), which
lies in [0, 1]; the word score is the mean of the three normalized values.
Characters compare by Unicode scalar value, so inputs are expected to be
pre-normalized tokens.
"""

from __future__ import annotations

from functools import lru_cache


def lcs_len(a: str, b: str) -> int:
    """Length of the longest (not necessarily contiguous) common subsequence."""
    if not a or not b:
        return 0
    # Row-rolling DP over the shorter string to bound memory.
    if len(b) > len(a):
        a, b = b, a
    prev = [0] * (len(b) + 1)
    for ca in a:
        cur = [0]
        for j, cb in enumerate(b, start=1):
            if ca == cb:
                cur.append(prev[j - 1] + 1)
            else:
                cur.append(max(cur[j - 1], prev[j]))
        prev = cur
    return prev[-1]


def mclcs_1(a: str, b: str) -> int:
    """Length of the longest common prefix."""
    n = 0
    for ca, cb in zip(a, b):
        if ca != cb:
            break
        n += 1
    return n


def mclcs_n(a: str, b: str) -> int:
    """Length of the longest common contiguous substring."""
    if not a or not b:
        return 0
    if len(b) > len(a):
        a, b = b, a
    best = 0
    prev = [0] * (len(b) + 1)
    for ca in a:
        cur = [0]
        for j, cb in enumerate(b, start=1):
            run = prev[j - 1] + 1 if ca == cb else 0
            cur.append(run)
            if run > best:
                best = run
        prev = cur
    return best


@lru_cache(maxsize=1 << 18)
def _word_sim_cached(a: str, b: str) -> float:
    denom = len(a) * len(b)
    v_lcs = lcs_len(a, b) ** 2 / denom
    v_1 = mclcs_1(a, b) ** 2 / denom
    v_n = mclcs_n(a, b) ** 2 / denom
    return (v_lcs + v_1 + v_n) / 3.0


def string_word_sim(a: str, b: str) -> float:
    """Mean of the three normalized common-subsequence scores, in [0, 1].

    Raises ValueError on an empty word (normalization is undefined).
    """
    if not a or not b:
        raise ValueError("string_word_sim requires non-empty words")
    if a > b:  # symmetric, so cache one orientation only
        a, b = b, a
    return _word_sim_cached(a, b)
