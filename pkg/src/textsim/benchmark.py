"""Benchmark driver: wire methods and datasets into a report table.

Each configured method is evaluated on whichever of the three tasks the
config provides a dataset for; unconfigured tasks stay N/A. Per task the
records are split 60/20/20 into train/test/dev with the config seed;
thresholds (paraphrase task) and term weights (tfidf) are fit on train
only, every reported cell is computed on test, and dev is deliberately
left untouched for experiments outside this module.

The entailment accuracy column is structurally N/A here: all built-in
methods emit one scalar score per pair, and mapping a scalar onto three
entailment classes is out of scope.
"""

from __future__ import annotations

import logging
import time
from pathlib import Path

from .config import MethodSpec, RunConfig
from .corpussim import (build_cooccurrence, build_term_doc, npmi_similarity,
                        truncated_svd, lsa_similarity)
from .datasets import (PairRecord, SplitSpec, load_afs, load_mrpc, load_sick,
                       split_dataset)
from .errors import MissingAssetError
from .metrics import ScoredPair, accuracy, calibrate_threshold, pearson, spearman
from .sentsim import (CombineWeights, WordSimilarityProvider, combined_similarity,
                      zero_provider)
from .taxonomy import lin_similarity, load_taxonomy
from .textprep import StopwordSet, TokenSequence, default_stopwords, load_stopwords, preprocess
from .vectorspace import cosine, fit_tfidf, load_embeddings, vectorize
from .report import ReportTable

log = logging.getLogger(__name__)


def load_corpus_tokens(path: str | Path, stopwords: StopwordSet) -> list[TokenSequence]:
    """One document per line, normalized and stop-word filtered.

    Lines that come out empty are dropped; an empty document would still
    count as a co-occurrence window and dilute every probability.
    """
    p = Path(path)
    if not p.is_file():
        raise MissingAssetError(f"no such file: {p}")
    docs = []
    for line in p.read_text(encoding="utf-8").splitlines():
        tokens = preprocess(line, stopwords)
        if tokens:
            docs.append(tokens)
    if not docs:
        raise MissingAssetError(f"corpus {p} contains no usable documents")
    return docs


def build_provider(method: MethodSpec, stopwords: StopwordSet,
                   seed: int = 0) -> WordSimilarityProvider:
    """Construct the word-similarity side of a combined method.

    Supports the provider-backed kinds; tfidf and embedding methods score
    whole sentences and have no word-pair provider.
    """
    if method.kind == "string":
        return zero_provider
    if method.kind == "lin+string":
        tax = load_taxonomy(method.taxonomy)
        return lambda a, b: lin_similarity(tax, a, b)
    if method.kind == "pmi+string":
        docs = load_corpus_tokens(method.corpus, stopwords)
        model = build_cooccurrence(docs, window_size=method.window)
        return lambda a, b: npmi_similarity(model, a, b)
    if method.kind == "lsa+string":
        docs = load_corpus_tokens(method.corpus, stopwords)
        matrix = build_term_doc(docs)
        k = min(method.rank, min(matrix.shape))
        # the stock iteration cap is tuned for small matrices; corpora need headroom
        max_iter = max(1000, 10 * min(matrix.shape))
        model = truncated_svd(matrix, k, seed=seed, max_iter=max_iter)
        return lambda a, b: lsa_similarity(model, a, b)
    raise ValueError(f"method kind {method.kind!r} has no word-similarity provider")


def _provider_scorer(method: MethodSpec, stopwords: StopwordSet, seed: int):
    provider = build_provider(method, stopwords, seed)
    weights = CombineWeights.from_string_weight(method.w_string)

    def score(record: PairRecord) -> float:
        t1 = preprocess(record.s1, stopwords)
        t2 = preprocess(record.s2, stopwords)
        return combined_similarity(t1, t2, provider, weights)

    return score


def _tfidf_scorer(train: list[PairRecord], test: list[PairRecord],
                  stopwords: StopwordSet):
    corpus = []
    for record in train:
        corpus.append(preprocess(record.s1, stopwords))
        corpus.append(preprocess(record.s2, stopwords))
    model = fit_tfidf(corpus)

    def score(record: PairRecord) -> float:
        v1 = vectorize(model, preprocess(record.s1, stopwords))
        v2 = vectorize(model, preprocess(record.s2, stopwords))
        return cosine(v1, v2)

    return score


def _embedding_scorer(method: MethodSpec, train: list[PairRecord],
                      test: list[PairRecord]):
    """Score pairs by cosine of precomputed sentence vectors, or None.

    Returns None when the table covers no id of this task (the method is
    then N/A for the task); partial coverage is an error because silently
    skipping records would change the evaluated split.
    """
    table = load_embeddings(method.embeddings)
    needed = [r.id for r in train + test]
    covered = sum(1 for rid in needed
                  if f"{rid}:s1" in table and f"{rid}:s2" in table)
    if covered == 0:
        return None
    if covered < len(needed):
        for rid in needed:
            for vid in (f"{rid}:s1", f"{rid}:s2"):
                if vid not in table:
                    raise MissingAssetError(
                        f"{method.embeddings} covers this task only partially "
                        f"(no vector for {vid})")

    def score(record: PairRecord) -> float:
        return cosine(table[f"{record.id}:s1"], table[f"{record.id}:s2"])

    return score


def _score_split(scorer, records: list[PairRecord]) -> list[float]:
    return [scorer(r) for r in records]


def _correlation_cells(scorer, train, test):
    preds = _score_split(scorer, test)
    golds = [r.gold.score for r in test]
    return pearson(preds, golds), spearman(preds, golds)


def _accuracy_cell(scorer, train, test):
    train_pairs = [ScoredPair(id=r.id, predicted=scorer(r), gold=r.gold) for r in train]
    threshold = calibrate_threshold(train_pairs)
    preds = [1 if scorer(r) >= threshold else 0 for r in test]
    golds = [r.gold.binary for r in test]
    return accuracy(preds, golds)


def run_benchmark(config: RunConfig) -> ReportTable:
    stopwords = (load_stopwords(config.stopwords) if config.stopwords
                 else default_stopwords())
    split_spec = SplitSpec(seed=config.seed)

    tasks: dict[str, tuple[list[PairRecord], list[PairRecord]]] = {}
    if config.sick is not None:
        relatedness, _ = load_sick(config.sick)
        train, test, _dev = split_dataset(relatedness, split_spec)
        tasks["sick"] = (train, test)
    if config.afs is not None:
        train, test, _dev = split_dataset(load_afs(config.afs), split_spec)
        tasks["afs"] = (train, test)
    if config.mrpc is not None:
        train, test, _dev = split_dataset(load_mrpc(config.mrpc), split_spec)
        tasks["mrpc"] = (train, test)

    table = ReportTable()
    for method in config.methods:
        table.add_method(method.name)
        shared_scorer = None
        if method.kind not in ("tfidf", "embedding"):
            shared_scorer = _provider_scorer(method, stopwords, config.seed)
        for task_name, (train, test) in tasks.items():
            started = time.perf_counter()
            if method.kind == "tfidf":
                scorer = _tfidf_scorer(train, test, stopwords)
            elif method.kind == "embedding":
                scorer = _embedding_scorer(method, train, test)
                if scorer is None:
                    log.info("%s/%s: no embedding coverage, N/A", method.name, task_name)
                    continue
            else:
                scorer = shared_scorer
            if task_name == "sick":
                r, rho = _correlation_cells(scorer, train, test)
                table.set_cell(method.name, "SICK-R Pearson", r)
                table.set_cell(method.name, "SICK-R Spearman", rho)
            elif task_name == "afs":
                r, rho = _correlation_cells(scorer, train, test)
                table.set_cell(method.name, "AFS Pearson", r)
                table.set_cell(method.name, "AFS Spearman", rho)
            else:
                table.set_cell(method.name, "MRPC Accuracy",
                               _accuracy_cell(scorer, train, test))
            log.info("%s/%s scored in %.2f s", method.name, task_name,
                     time.perf_counter() - started)
    return table


def compare_sentences(method: MethodSpec, s1: str, s2: str,
                      stopwords: StopwordSet, seed: int = 0) -> float:
    """Score one raw sentence pair with a configured method.

    tfidf needs a corpus to fit term weights on (pass one via the method
    spec); embedding methods address sentences by record id and cannot
    score free-standing text.
    """
    if method.kind == "embedding":
        raise ValueError("embedding methods score dataset records by id, "
                         "not free-standing sentences")
    t1 = preprocess(s1, stopwords)
    t2 = preprocess(s2, stopwords)
    if method.kind == "tfidf":
        if method.corpus is None:
            raise ValueError("tfidf comparison needs a corpus to fit term weights on")
        model = fit_tfidf(load_corpus_tokens(method.corpus, stopwords))
        return cosine(vectorize(model, t1), vectorize(model, t2))
    provider = build_provider(method, stopwords, seed)
    weights = CombineWeights.from_string_weight(method.w_string)
    return combined_similarity(t1, t2, provider, weights)
