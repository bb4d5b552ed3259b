"""Classical text-similarity measures and a benchmark runner.

The library builds sentence similarity out of word-level measures: a
character-level string score (three longest-common-subsequence variants),
an information-content measure over an IS-A taxonomy, corpus-driven PMI
and LSA scores, plus whole-sentence tf-idf and precomputed-embedding
cosine baselines. A match-and-remove combiner turns any word-level
measure into a sentence score, and the benchmark harness evaluates every
method on paraphrase, argument-similarity and relatedness datasets.
"""

from .corpussim import (CooccurrenceModel, LsaModel, TermDocMatrix,
                        build_cooccurrence, build_term_doc, lsa_similarity,
                        npmi_similarity, svd_triplets, truncated_svd)
from .datasets import (GoldLabel, PairRecord, SplitSpec, load_afs, load_mrpc,
                       load_sick, split_dataset)
from .errors import (ConfigError, ConvergenceError, DataFormatError,
                     MissingAssetError)
from .metrics import (ScoredPair, accuracy, calibrate_threshold, pearson,
                      spearman)
from .benchmark import compare_sentences, run_benchmark
from .config import MethodSpec, RunConfig, parse_config, validate_assets
from .report import COLUMNS, ReportTable
from .sentsim import (CombineWeights, MatchResult, WordSimilarityProvider,
                      build_joint_matrix, combined_similarity,
                      exact_match_filter, greedy_extract)
from .stringsim import lcs_len, mclcs_1, mclcs_n, string_word_sim
from .taxonomy import (Taxonomy, information_content, lin_similarity,
                       load_taxonomy, lowest_common_subsumer)
from .textprep import (default_stopwords, load_stopwords, normalize,
                       preprocess, remove_stopwords)
from .vectorspace import (EmbeddingTable, TfIdfModel, cosine, fit_tfidf,
                          load_embeddings, vectorize)

__version__ = "0.1.0"

__all__ = [
    "COLUMNS", "CombineWeights", "ConfigError", "ConvergenceError",
    "CooccurrenceModel", "DataFormatError", "EmbeddingTable", "GoldLabel",
    "LsaModel", "MatchResult", "MethodSpec", "MissingAssetError",
    "PairRecord", "ReportTable", "RunConfig", "ScoredPair", "SplitSpec",
    "Taxonomy", "TermDocMatrix", "TfIdfModel", "WordSimilarityProvider",
    "accuracy", "build_cooccurrence", "build_joint_matrix", "build_term_doc",
    "calibrate_threshold", "combined_similarity", "compare_sentences",
    "cosine", "default_stopwords", "exact_match_filter", "fit_tfidf",
    "greedy_extract", "information_content", "lcs_len", "lin_similarity",
    "load_afs", "load_embeddings", "load_mrpc", "load_sick",
    "load_stopwords", "load_taxonomy", "lowest_common_subsumer", "lsa_similarity",
    "mclcs_1", "mclcs_n", "normalize", "npmi_similarity", "parse_config",
    "pearson", "preprocess", "remove_stopwords", "run_benchmark",
    "spearman", "split_dataset", "string_word_sim", "svd_triplets",
    "truncated_svd", "validate_assets", "vectorize", "__version__",
]
