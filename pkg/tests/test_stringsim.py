from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from textsim.stringsim import lcs_len, mclcs_1, mclcs_n, string_word_sim


# Exponential brute-force oracles, deliberately independent of the DP code.

def oracle_lcs(a: str, b: str) -> int:
    best = 0
    for r in range(len(a), 0, -1):
        for idxs in combinations(range(len(a)), r):
            sub = "".join(a[i] for i in idxs)
            it = iter(b)
            if all(ch in it for ch in sub):
                return r
    return best


def oracle_prefix(a: str, b: str) -> int:
    best = 0
    for k in range(1, min(len(a), len(b)) + 1):
        if a[:k] == b[:k]:
            best = k
    return best


def oracle_substring(a: str, b: str) -> int:
    best = 0
    for i in range(len(a)):
        for j in range(i + 1, len(a) + 1):
            if a[i:j] in b and j - i > best:
                best = j - i
    return best


def test_lcs_examples():
    assert lcs_len("abcd", "abd") == 3
    assert lcs_len("x", "x") == 1
    assert lcs_len("ab", "cd") == 0
    assert lcs_len("", "abc") == 0


def test_mclcs_1_examples():
    assert mclcs_1("albastru", "alabaster") == 2
    assert mclcs_1("x", "x") == 1
    assert mclcs_1("ab", "cd") == 0


def test_mclcs_n_examples():
    assert mclcs_n("albastru", "alabaster") == 4  # "bast"
    assert mclcs_n("x", "x") == 1
    assert mclcs_n("ab", "cd") == 0


def test_word_sim_identity_and_disjoint():
    assert string_word_sim("book", "book") == 1.0
    assert string_word_sim("ab", "cd") == 0.0


def test_word_sim_worked_example():
    # lengths 7, 2, 4 over |a|=8, |b|=9: (49 + 4 + 16) / 72 / 3
    expected = (49 / 72 + 4 / 72 + 16 / 72) / 3
    assert string_word_sim("albastru", "alabaster") == pytest.approx(expected, abs=1e-15)


def test_word_sim_empty_word_rejected():
    with pytest.raises(ValueError):
        string_word_sim("", "a")
    with pytest.raises(ValueError):
        string_word_sim("a", "")


words = st.text(alphabet="abc", min_size=1, max_size=7)


@given(words, words)
def test_matches_brute_force_oracles(a, b):
    assert lcs_len(a, b) == oracle_lcs(a, b)
    assert mclcs_1(a, b) == oracle_prefix(a, b)
    assert mclcs_n(a, b) == oracle_substring(a, b)


@given(words, words)
def test_symmetry(a, b):
    assert lcs_len(a, b) == lcs_len(b, a)
    assert mclcs_1(a, b) == mclcs_1(b, a)
    assert mclcs_n(a, b) == mclcs_n(b, a)
    assert string_word_sim(a, b) == string_word_sim(b, a)


@given(words, words)
def test_chain_inequality_and_bounds(a, b):
    p, s, l = mclcs_1(a, b), mclcs_n(a, b), lcs_len(a, b)
    assert p <= s <= l <= min(len(a), len(b))
    assert 0.0 <= string_word_sim(a, b) <= 1.0


@given(words)
def test_self_similarity(a):
    assert string_word_sim(a, a) == 1.0
