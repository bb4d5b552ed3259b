"""Dataset loading for sentence-pair corpora plus a reproducible splitter.

Three input formats are supported:

* paraphrase TSV: one header line, then
  ``label<TAB>id1<TAB>id2<TAB>sentence1<TAB>sentence2`` with binary labels;
* argument-similarity CSV: no header, comma-separated, where literal commas
  inside sentences are doubled (``,,``) so single commas act as field
  separators;
* relatedness/entailment TSV: one header line naming at least
  ``sentence_A``, ``sentence_B``, ``relatedness_score`` and
  ``entailment_judgment`` (case-insensitive), yielding two views over the
  same pairs.

Record ids are synthesized as ``{prefix}-{i}`` from the 0-based data-row
index so that runs over the same file are stable and externally provided
vectors can refer to individual sentences as ``{record_id}:s1`` / ``:s2``.

Splitting shuffles with an explicit 64-bit linear congruential generator
(the MMIX multiplier/increment) driving a Fisher-Yates pass, so the same
(records, seed) always yields byte-identical train/test/dev partitions on
any platform or Python version.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import DataFormatError, MissingAssetError


@dataclass(frozen=True)
class GoldLabel:
    """Exactly one of binary, score, entailment is set."""

    binary: int | None = None
    score: float | None = None
    entailment: str | None = None

    def __post_init__(self):
        filled = sum(v is not None for v in (self.binary, self.score, self.entailment))
        if filled != 1:
            raise ValueError("GoldLabel needs exactly one of binary/score/entailment")
        if self.binary is not None and self.binary not in (0, 1):
            raise ValueError(f"binary label must be 0 or 1, got {self.binary}")


@dataclass(frozen=True)
class PairRecord:
    id: str
    s1: str
    s2: str
    gold: GoldLabel


@dataclass(frozen=True)
class SplitSpec:
    train_frac: float = 0.6
    test_frac: float = 0.2
    dev_frac: float = 0.2
    seed: int = 0

    def __post_init__(self):
        fracs = (self.train_frac, self.test_frac, self.dev_frac)
        if any(f < 0.0 for f in fracs):
            raise ValueError("split fractions must be nonnegative")
        if abs(sum(fracs) - 1.0) > 1e-9:
            raise ValueError(f"split fractions must sum to 1, got {sum(fracs)!r}")


def _read_lines(path: str | Path) -> list[str]:
    p = Path(path)
    if not p.is_file():
        raise MissingAssetError(f"no such file: {p}")
    return p.read_text(encoding="utf-8").splitlines()


def load_mrpc(path: str | Path) -> list[PairRecord]:
    """Load a paraphrase TSV (header line, then label/id1/id2/s1/s2 rows)."""
    lines = _read_lines(path)
    if not lines:
        raise DataFormatError("empty file, expected a header line", str(path), 1)
    records = []
    for i, line in enumerate(lines[1:]):
        lineno = i + 2
        fields = line.split("\t")
        if len(fields) != 5:
            raise DataFormatError(f"expected 5 tab-separated fields, got {len(fields)}",
                                  str(path), lineno)
        label, _, _, s1, s2 = fields
        if label not in ("0", "1"):
            raise DataFormatError(f"label must be 0 or 1, got {label!r}", str(path), lineno)
        if not s1.strip() or not s2.strip():
            raise DataFormatError("empty sentence field", str(path), lineno)
        records.append(PairRecord(id=f"mrpc-{i}", s1=s1, s2=s2,
                                  gold=GoldLabel(binary=int(label))))
    return records


# A single comma separates fields; doubled commas are literal commas that
# belong to the sentence text.
_AFS_FIELD_SEP = re.compile(r"(?<!,),(?!,)")


def load_afs(path: str | Path, *, score_col: int = 0, s1_col: int = 1,
             s2_col: int = 2, n_cols: int = 3) -> list[PairRecord]:
    """Load an argument-similarity CSV with doubled in-sentence commas.

    Column positions are configurable for exports that carry extra
    metadata columns; defaults assume bare score,sentence1,sentence2 rows.
    """
    used = (score_col, s1_col, s2_col)
    if len(set(used)) != 3 or any(c < 0 or c >= n_cols for c in used):
        raise ValueError(f"column indices {used} must be distinct and within {n_cols} columns")
    lines = _read_lines(path)
    records = []
    for i, line in enumerate(lines):
        lineno = i + 1
        if not line.strip():
            continue
        fields = [f.replace(",,", ",") for f in _AFS_FIELD_SEP.split(line)]
        if len(fields) != n_cols:
            raise DataFormatError(f"expected {n_cols} comma-separated fields, got {len(fields)}",
                                  str(path), lineno)
        try:
            score = float(fields[score_col])
        except ValueError:
            raise DataFormatError(f"unparseable similarity score {fields[score_col]!r}",
                                  str(path), lineno) from None
        s1, s2 = fields[s1_col], fields[s2_col]
        if not s1.strip() or not s2.strip():
            raise DataFormatError("empty sentence field", str(path), lineno)
        records.append(PairRecord(id=f"afs-{i}", s1=s1, s2=s2,
                                  gold=GoldLabel(score=score)))
    return records


_SICK_LABELS = frozenset({"ENTAILMENT", "NEUTRAL", "CONTRADICTION"})


def load_sick(path: str | Path) -> tuple[list[PairRecord], list[PairRecord]]:
    """Load a relatedness/entailment TSV into two aligned record lists.

    Returns (relatedness view, entailment view); both share record ids, so
    index i refers to the same underlying sentence pair in each.
    """
    lines = _read_lines(path)
    if not lines:
        raise DataFormatError("empty file, expected a header line", str(path), 1)
    header = [h.strip().lower() for h in lines[0].split("\t")]
    cols = {}
    for name in ("sentence_a", "sentence_b", "relatedness_score", "entailment_judgment"):
        if name not in header:
            raise DataFormatError(f"missing required column {name!r}", str(path), 1)
        cols[name] = header.index(name)
    relatedness, entailment = [], []
    for i, line in enumerate(lines[1:]):
        lineno = i + 2
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != len(header):
            raise DataFormatError(f"expected {len(header)} tab-separated fields, got {len(fields)}",
                                  str(path), lineno)
        s1 = fields[cols["sentence_a"]]
        s2 = fields[cols["sentence_b"]]
        if not s1.strip() or not s2.strip():
            raise DataFormatError("empty sentence field", str(path), lineno)
        raw_score = fields[cols["relatedness_score"]]
        try:
            score = float(raw_score)
        except ValueError:
            raise DataFormatError(f"unparseable relatedness score {raw_score!r}",
                                  str(path), lineno) from None
        if not 1.0 <= score <= 5.0:
            raise DataFormatError(f"relatedness score {score} outside [1, 5]",
                                  str(path), lineno)
        raw_label = fields[cols["entailment_judgment"]]
        label = raw_label.strip().upper()
        if label not in _SICK_LABELS:
            raise DataFormatError(f"unknown entailment label {raw_label!r}",
                                  str(path), lineno)
        rid = f"sick-{i}"
        relatedness.append(PairRecord(id=rid, s1=s1, s2=s2, gold=GoldLabel(score=score)))
        entailment.append(PairRecord(id=rid, s1=s1, s2=s2, gold=GoldLabel(entailment=label)))
    return relatedness, entailment


# Knuth's MMIX multiplier and increment; any 64-bit LCG would do, but the
# exact constants are part of the reproducibility contract for splits.
_LCG_A = 6364136223846793005
_LCG_C = 1442695040888963407
_MASK64 = (1 << 64) - 1


def _shuffled_indices(n: int, seed: int) -> list[int]:
    state = seed & _MASK64
    idx = list(range(n))
    for i in range(n - 1, 0, -1):
        state = (_LCG_A * state + _LCG_C) & _MASK64
        j = state % (i + 1)
        idx[i], idx[j] = idx[j], idx[i]
    return idx


def split_dataset(records: list[PairRecord],
                  spec: SplitSpec = SplitSpec()
                  ) -> tuple[list[PairRecord], list[PairRecord], list[PairRecord]]:
    """Partition into (train, test, dev) of sizes floor(f*N)/floor(f*N)/rest."""
    n = len(records)
    idx = _shuffled_indices(n, spec.seed)
    # round() guards floor against 0.6 * N landing a hair under an integer
    n_train = math.floor(round(spec.train_frac * n, 9))
    n_test = math.floor(round(spec.test_frac * n, 9))
    train = [records[i] for i in idx[:n_train]]
    test = [records[i] for i in idx[n_train:n_train + n_test]]
    dev = [records[i] for i in idx[n_train + n_test:]]
    return train, test, dev
