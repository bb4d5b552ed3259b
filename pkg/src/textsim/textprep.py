"""Sentence preprocessing: alphanumeric tokenization and stop-word removal.

A token sequence is a list of lowercase alphanumeric words in original
order. Splitting happens on every maximal run of non-alphanumeric
characters, so punctuation, whitespace and intra-word apostrophes all act
as separators ("don't" -> ["don", "t"]). Non-ASCII letters survive and
are lowercased.
"""

from __future__ import annotations

import re
from importlib import resources

from .errors import MissingAssetError

TokenSequence = list[str]
StopwordSet = frozenset[str]

# \w minus underscore: Unicode letters and digits only.
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

_DEFAULT_STOPWORDS: StopwordSet | None = None


def normalize(text: str) -> TokenSequence:
    """Lowercase *text* and split it into alphanumeric tokens.

    Empty input yields an empty sequence. Token order follows the input.
    """
    return _TOKEN_RE.findall(text.lower())


def remove_stopwords(seq: TokenSequence, stopwords: StopwordSet) -> TokenSequence:
    """Drop every token contained in *stopwords*, preserving order."""
    return [tok for tok in seq if tok not in stopwords]


def preprocess(text: str, stopwords: StopwordSet) -> TokenSequence:
    """normalize followed by remove_stopwords."""
    return remove_stopwords(normalize(text), stopwords)


def load_stopwords(path: str) -> StopwordSet:
    """Read a stop-word file: one token per line, '#' lines and blanks ignored.

    Entries are lowercased so the set always satisfies its invariant.
    """
    try:
        fh = open(path, encoding="utf-8")
    except FileNotFoundError:
        raise MissingAssetError(f"stop-word file not found: {path}") from None
    with fh:
        words = set()
        for line in fh:
            entry = line.strip()
            if not entry or entry.startswith("#"):
                continue
            words.add(entry.lower())
    return frozenset(words)


def default_stopwords() -> StopwordSet:
    """The English stop-word list shipped with the package."""
    global _DEFAULT_STOPWORDS
    if _DEFAULT_STOPWORDS is None:
        text = resources.files("textsim.data").joinpath("stopwords_en.txt").read_text("utf-8")
        words = set()
        for line in text.splitlines():
            entry = line.strip()
            if entry and not entry.startswith("#"):
                words.add(entry.lower())
        _DEFAULT_STOPWORDS = frozenset(words)
    return _DEFAULT_STOPWORDS
