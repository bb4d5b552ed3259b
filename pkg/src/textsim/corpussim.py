"""Corpus-based word similarity: windowed NPMI and LSA over a truncated SVD.

Co-occurrence statistics count *windows*: a word (or unordered word pair)
is counted at most once per sliding window, so pair counts can never
exceed either word's count and all window probabilities stay coherent.

The SVD is deliberately self-contained: repeated power iteration on the
Gram matrix with re-orthogonalization against already-extracted vectors,
started from seeded random vectors so repeat runs are bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError
from .textprep import TokenSequence
from .vectorspace import cosine


@dataclass(frozen=True)
class CooccurrenceModel:
    unigram_counts: dict[str, int]
    pair_counts: dict[tuple[str, str], int]
    window_total: int
    window_size: int

    def pair_count(self, w1: str, w2: str) -> int:
        key = (w1, w2) if w1 <= w2 else (w2, w1)
        return self.pair_counts.get(key, 0)


def _windows(seq: TokenSequence, size: int):
    if not seq:
        return
    if len(seq) <= size:
        yield seq
        return
    for i in range(len(seq) - size + 1):
        yield seq[i:i + size]


def build_cooccurrence(corpus: list[TokenSequence], window_size: int) -> CooccurrenceModel:
    """Count word and unordered-pair presence per sliding window.

    A sequence shorter than the window contributes a single window covering
    the whole sequence. Raises ValueError when the corpus yields no windows.
    """
    if window_size < 1:
        raise ValueError("window_size must be >= 1")
    if not corpus:
        raise ValueError("build_cooccurrence requires a non-empty corpus")
    unigrams: dict[str, int] = {}
    pairs: dict[tuple[str, str], int] = {}
    total = 0
    for seq in corpus:
        for window in _windows(seq, window_size):
            total += 1
            present = sorted(set(window))
            for w in present:
                unigrams[w] = unigrams.get(w, 0) + 1
            for i, w1 in enumerate(present):
                for w2 in present[i + 1:]:
                    key = (w1, w2)
                    pairs[key] = pairs.get(key, 0) + 1
    if total == 0:
        raise ValueError("corpus holds no tokens, no windows to count")
    return CooccurrenceModel(unigram_counts=unigrams, pair_counts=pairs,
                             window_total=total, window_size=window_size)


def npmi_similarity(model: CooccurrenceModel, w1: str, w2: str) -> float:
    """Normalized pointwise mutual information clamped into [0, 1].

    Zero when either word is unseen or the pair never co-occurs; a pair
    that appears in every window (joint probability 1) is defined as 1.0
    because the NPMI denominator vanishes there.
    """
    if w1 == w2:
        joint = model.unigram_counts.get(w1, 0)
    else:
        joint = model.pair_count(w1, w2)
    n1 = model.unigram_counts.get(w1, 0)
    n2 = model.unigram_counts.get(w2, 0)
    if joint == 0 or n1 == 0 or n2 == 0:
        return 0.0
    p_joint = joint / model.window_total
    if p_joint >= 1.0:
        return 1.0
    p1 = n1 / model.window_total
    p2 = n2 / model.window_total
    pmi = math.log(p_joint / (p1 * p2))
    npmi = pmi / -math.log(p_joint)
    return min(1.0, max(0.0, npmi))


@dataclass(frozen=True)
class TermDocMatrix:
    vocab: dict[str, int]
    n_docs: int
    entries: dict[tuple[int, int], float]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.vocab), self.n_docs)

    def to_dense(self) -> np.ndarray:
        a = np.zeros(self.shape)
        for (i, j), v in self.entries.items():
            a[i, j] = v
        return a


def build_term_doc(corpus: list[TokenSequence]) -> TermDocMatrix:
    """tf * idf term-document matrix with idf(w) = ln(N / df(w)); zeros unstored."""
    if not corpus:
        raise ValueError("build_term_doc requires a non-empty corpus")
    n_docs = len(corpus)
    df: dict[str, int] = {}
    for doc in corpus:
        for word in set(doc):
            df[word] = df.get(word, 0) + 1
    vocab = {w: i for i, w in enumerate(sorted(df))}
    idf = {w: math.log(n_docs / c) for w, c in df.items()}
    entries: dict[tuple[int, int], float] = {}
    for j, doc in enumerate(corpus):
        tf: dict[str, int] = {}
        for tok in doc:
            tf[tok] = tf.get(tok, 0) + 1
        for word, count in tf.items():
            value = count * idf[word]
            if value != 0.0:
                entries[(vocab[word], j)] = value
    return TermDocMatrix(vocab=vocab, n_docs=n_docs, entries=entries)


@dataclass(frozen=True)
class LsaModel:
    word_vectors: dict[str, np.ndarray]
    k: int
    singular_values: np.ndarray


def svd_triplets(a: np.ndarray, k: int, tol: float = 1e-10,
                 max_iter: int | None = None, seed: int = 0
                 ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Top-k singular triplets (U, s, Vt) by deflated power iteration.

    Each right vector iterates on the Gram matrix inside the orthogonal
    complement of the vectors already found; convergence requires the
    eigen-residual to fall below tol relative to the squared Frobenius
    norm. Raises ConvergenceError (with the achieved residual) when a
    triplet fails to settle within max_iter sweeps.
    """
    a = np.asarray(a, dtype=float)
    m, n = a.shape
    if not 1 <= k <= min(m, n):
        raise ValueError(f"k={k} outside 1..min{a.shape}")
    if max_iter is None:
        max_iter = 10 * min(m, n)
    rng = np.random.default_rng(seed)
    scale = float(np.linalg.norm(a, "fro")) ** 2
    vs: list[np.ndarray] = []
    us: list[np.ndarray] = []
    sigmas: list[float] = []

    def reorthogonalize(w: np.ndarray, basis: list[np.ndarray]) -> np.ndarray:
        for _ in range(2):  # twice is enough for working precision
            for q in basis:
                w = w - (q @ w) * q
        return w

    for _ in range(k):
        v = reorthogonalize(rng.standard_normal(n), vs)
        norm = np.linalg.norm(v)
        if norm == 0.0:
            raise ConvergenceError("degenerate start vector after deflation")
        v /= norm
        lam = 0.0
        residual = math.inf
        converged = False
        for _ in range(max_iter):
            # two Gram applications per sweep: the first advances the
            # iterate, the second doubles as the residual probe
            w = reorthogonalize(a.T @ (a @ v), vs)
            norm = float(np.linalg.norm(w))
            if norm == 0.0:
                lam = 0.0
                residual = 0.0
                converged = True
                break
            v = w / norm
            w = reorthogonalize(a.T @ (a @ v), vs)
            lam = float(v @ w)
            residual = float(np.linalg.norm(w - lam * v))
            if residual <= tol * scale:
                converged = True
                break
            norm = float(np.linalg.norm(w))
            if norm == 0.0:
                lam = 0.0
                residual = 0.0
                converged = True
                break
            v = w / norm
        if not converged:
            raise ConvergenceError(
                f"singular triplet {len(sigmas)} did not converge in {max_iter} "
                f"iterations (residual {residual:.3e}, tolerance {tol * scale:.3e})")
        av = a @ v
        sigma = float(np.linalg.norm(av))
        if sigma > 0.0:
            u = av / sigma
        else:
            # Null-space direction: sigma is exactly 0, pick any unit u
            # orthogonal to the ones already found so U stays orthonormal.
            u = reorthogonalize(rng.standard_normal(m), us)
            u /= np.linalg.norm(u)
        vs.append(v)
        us.append(u)
        sigmas.append(sigma)

    order = sorted(range(k), key=lambda i: -sigmas[i])
    u_mat = np.column_stack([us[i] for i in order])
    v_mat = np.column_stack([vs[i] for i in order])
    s = np.array([sigmas[i] for i in order])
    return u_mat, s, v_mat.T


def truncated_svd(matrix: TermDocMatrix, k: int, tol: float = 1e-10,
                  max_iter: int | None = None, seed: int = 0) -> LsaModel:
    """Rank-k LSA factorization of a term-document matrix.

    Word vectors are the rows of U_k * diag(s_k), keyed by vocabulary word.
    """
    dense = matrix.to_dense()
    u, s, _ = svd_triplets(dense, k, tol=tol, max_iter=max_iter, seed=seed)
    scaled = u * s  # row i holds word i's latent coordinates
    word_vectors = {w: scaled[i] for w, i in matrix.vocab.items()}
    return LsaModel(word_vectors=word_vectors, k=k, singular_values=s)


def lsa_similarity(model: LsaModel, w1: str, w2: str) -> float:
    """Cosine of latent word vectors, clamped into [0, 1]; unseen words score 0."""
    v1 = model.word_vectors.get(w1)
    v2 = model.word_vectors.get(w2)
    if v1 is None or v2 is None:
        return 0.0
    return cosine(v1, v2)
