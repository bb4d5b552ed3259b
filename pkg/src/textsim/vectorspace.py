"""Sentence vectors (TF-IDF and externally computed embeddings) plus cosine.

TF-IDF vectors are sparse token->weight mappings; embeddings are dense
numpy vectors loaded from a TSV of ``id<TAB>f1 f2 ... fd`` rows keyed by
stable record ids. Cosine similarity is clamped into [0, 1] at this
boundary because dense embedding cosines can go negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DataFormatError, MissingAssetError
from .textprep import TokenSequence

SparseVector = dict[str, float]


@dataclass(frozen=True)
class TfIdfModel:
    idf: dict[str, float]
    document_count: int

    @property
    def vocab(self) -> dict[str, int]:
        """Dense word->index assignment in sorted-vocabulary order."""
        return {w: i for i, w in enumerate(sorted(self.idf))}


def fit_tfidf(corpus: list[TokenSequence]) -> TfIdfModel:
    """Fit idf(w) = ln(N / df(w)) over a non-empty corpus."""
    if not corpus:
        raise ValueError("fit_tfidf requires a non-empty corpus")
    n_docs = len(corpus)
    df: dict[str, int] = {}
    for doc in corpus:
        for word in set(doc):
            df[word] = df.get(word, 0) + 1
    idf = {w: math.log(n_docs / c) for w, c in df.items()}
    return TfIdfModel(idf=idf, document_count=n_docs)


def vectorize(model: TfIdfModel, seq: TokenSequence) -> SparseVector:
    """tf * idf sentence vector; out-of-vocabulary tokens contribute nothing."""
    tf: dict[str, int] = {}
    for tok in seq:
        tf[tok] = tf.get(tok, 0) + 1
    vec: SparseVector = {}
    for word, count in tf.items():
        weight = model.idf.get(word)
        if weight is not None and weight != 0.0:
            vec[word] = count * weight
    return vec


def cosine(v1, v2) -> float:
    """Cosine similarity clamped into [0, 1]; any zero vector scores 0.

    Accepts two sparse token->weight dicts or two dense sequences of equal
    dimension (dense mismatch raises ValueError).
    """
    if v1 is v2:
        # self-similarity is exactly 1 for any nonzero vector; computing it
        # through sqrt would lose the identity to rounding
        if isinstance(v1, dict):
            nonzero = any(a != 0.0 for a in v1.values())
        else:
            nonzero = bool(np.any(np.asarray(v1, dtype=float)))
        return 1.0 if nonzero else 0.0
    if isinstance(v1, dict) and isinstance(v2, dict):
        dot = 0.0
        if len(v2) < len(v1):
            v1, v2 = v2, v1
        for key, a in v1.items():
            b = v2.get(key)
            if b is not None:
                dot += a * b
        n1 = math.sqrt(math.fsum(a * a for a in v1.values()))
        n2 = math.sqrt(math.fsum(b * b for b in v2.values()))
    else:
        a = np.asarray(v1, dtype=float)
        b = np.asarray(v2, dtype=float)
        if a.shape != b.shape:
            raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
        dot = float(a @ b)
        n1 = float(np.linalg.norm(a))
        n2 = float(np.linalg.norm(b))
    if n1 == 0.0 or n2 == 0.0:
        return 0.0
    return min(1.0, max(0.0, dot / (n1 * n2)))


@dataclass(frozen=True)
class EmbeddingTable:
    vectors: dict[str, np.ndarray]
    dimension: int

    def __contains__(self, key: str) -> bool:
        return key in self.vectors

    def __getitem__(self, key: str) -> np.ndarray:
        return self.vectors[key]


def load_embeddings(path: str) -> EmbeddingTable:
    """Load an embedding TSV; dimension mismatches and duplicate ids are fatal."""
    try:
        fh = open(path, encoding="utf-8")
    except FileNotFoundError:
        raise MissingAssetError(f"embedding file not found: {path}") from None

    vectors: dict[str, np.ndarray] = {}
    dim: int | None = None
    with fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise DataFormatError(
                    f"expected 'id<TAB>floats', found {len(fields)} fields",
                    path=path, line=lineno)
            key, values = fields
            if key in vectors:
                raise DataFormatError(f"duplicate id {key!r}", path=path, line=lineno)
            try:
                vec = np.array([float(x) for x in values.split()], dtype=float)
            except ValueError:
                raise DataFormatError(
                    "non-numeric embedding component", path=path, line=lineno) from None
            if vec.size == 0:
                raise DataFormatError("empty embedding vector", path=path, line=lineno)
            if dim is None:
                dim = vec.size
            elif vec.size != dim:
                raise DataFormatError(
                    f"dimension {vec.size} differs from established dimension {dim}",
                    path=path, line=lineno)
            vec.setflags(write=False)
            vectors[key] = vec
    if dim is None:
        raise DataFormatError("embedding file holds no vectors", path=path)
    return EmbeddingTable(vectors=vectors, dimension=dim)
