"""IS-A taxonomy loading and the Lin information-content word similarity.

The on-disk format is a neutral TSV, one concept per line:

    concept_id<TAB>parent_id[,parent_id...]|-<TAB>lemma[,lemma...]<TAB>raw_count

where ``-`` in the parent field marks a root and ``#`` starts a comment
line. Raw counts are summed bottom-up at load time: a concept's cumulative
count is its own raw count plus the raw counts of all its descendants,
each descendant counted once even when multiple IS-A paths exist.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DataFormatError, MissingAssetError


@dataclass
class Taxonomy:
    """Immutable concept graph with cumulative counts and information content."""

    parents: dict[str, tuple[str, ...]]
    lemma_index: dict[str, frozenset[str]]
    counts: dict[str, int]
    total_count: int
    ic: dict[str, float]

    _ancestors: dict[str, frozenset[str]] = field(default_factory=dict, repr=False)
    _pair_cache: dict[tuple[str, str], float] = field(default_factory=dict, repr=False)

    @property
    def concepts(self) -> set[str]:
        return set(self.parents)

    def ancestors(self, concept: str) -> frozenset[str]:
        """Ancestors of *concept*, including itself (memoized)."""
        cached = self._ancestors.get(concept)
        if cached is not None:
            return cached
        if concept not in self.parents:
            raise KeyError(f"unknown concept id: {concept!r}")
        # Iterative post-order so deep chains cannot hit the recursion limit.
        stack = [concept]
        while stack:
            c = stack[-1]
            if c in self._ancestors:
                stack.pop()
                continue
            missing = [p for p in self.parents[c] if p not in self._ancestors]
            if missing:
                stack.extend(missing)
                continue
            acc = {c}
            for p in self.parents[c]:
                acc |= self._ancestors[p]
            self._ancestors[c] = frozenset(acc)
            stack.pop()
        return self._ancestors[concept]


def load_taxonomy(path: str) -> Taxonomy:
    """Parse and validate a taxonomy TSV file.

    Fatal errors (cycle, dangling parent, malformed line, non-positive
    counts) raise DataFormatError with the offending line number.
    """
    try:
        fh = open(path, encoding="utf-8")
    except FileNotFoundError:
        raise MissingAssetError(f"taxonomy file not found: {path}") from None

    parents: dict[str, tuple[str, ...]] = {}
    raw_counts: dict[str, int] = {}
    lemmas_of: dict[str, tuple[str, ...]] = {}
    lineno_of: dict[str, int] = {}
    with fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 4:
                raise DataFormatError(
                    f"expected 4 tab-separated fields, found {len(fields)}",
                    path=path, line=lineno)
            concept, parent_field, lemma_field, count_field = fields
            if not concept:
                raise DataFormatError("empty concept id", path=path, line=lineno)
            if concept in parents:
                raise DataFormatError(
                    f"duplicate concept id {concept!r} (first seen at line "
                    f"{lineno_of[concept]})", path=path, line=lineno)
            if parent_field == "-":
                parent_ids: tuple[str, ...] = ()
            else:
                parent_ids = tuple(p for p in parent_field.split(",") if p)
                if not parent_ids:
                    raise DataFormatError("empty parent field (use '-' for a root)",
                                          path=path, line=lineno)
            try:
                raw = int(count_field)
            except ValueError:
                raise DataFormatError(f"raw count is not an integer: {count_field!r}",
                                      path=path, line=lineno) from None
            if raw < 0:
                raise DataFormatError(f"negative raw count: {raw}", path=path, line=lineno)
            parents[concept] = parent_ids
            raw_counts[concept] = raw
            lemmas_of[concept] = tuple(w for w in lemma_field.split(",") if w)
            lineno_of[concept] = lineno

    if not parents:
        raise DataFormatError("taxonomy file holds no concepts", path=path)

    for concept, parent_ids in parents.items():
        for p in parent_ids:
            if p not in parents:
                raise DataFormatError(
                    f"concept {concept!r} names unknown parent {p!r}",
                    path=path, line=lineno_of[concept])

    _check_acyclic(parents, path, lineno_of)

    # Push each raw count up to every ancestor-or-self exactly once.
    tax = Taxonomy(parents=parents, lemma_index={}, counts={}, total_count=0, ic={})
    counts = {c: 0 for c in parents}
    for concept, raw in raw_counts.items():
        if raw == 0:
            continue
        for anc in tax.ancestors(concept):
            counts[anc] += raw
    total = sum(counts[c] for c, ps in parents.items() if not ps)
    if total <= 0:
        raise DataFormatError("total count over roots is not positive", path=path)
    for concept, count in counts.items():
        if count <= 0:
            raise DataFormatError(
                f"concept {concept!r} has cumulative count 0; "
                "every concept needs a positive count somewhere below it",
                path=path, line=lineno_of[concept])

    lemma_index: dict[str, set[str]] = {}
    for concept, lemmas in lemmas_of.items():
        for lemma in lemmas:
            lemma_index.setdefault(lemma, set()).add(concept)

    tax.counts = counts
    tax.total_count = total
    tax.ic = {c: -math.log(n / total) for c, n in counts.items()}
    tax.lemma_index = {w: frozenset(cs) for w, cs in lemma_index.items()}
    return tax


def _check_acyclic(parents: dict[str, tuple[str, ...]], path: str,
                   lineno_of: dict[str, int]) -> None:
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {c: WHITE for c in parents}
    for start in parents:
        if color[start] != WHITE:
            continue
        stack: list[tuple[str, int]] = [(start, 0)]
        color[start] = GRAY
        while stack:
            node, idx = stack[-1]
            ps = parents[node]
            if idx == len(ps):
                color[node] = BLACK
                stack.pop()
                continue
            stack[-1] = (node, idx + 1)
            nxt = ps[idx]
            if color[nxt] == GRAY:
                raise DataFormatError(
                    f"IS-A cycle through {nxt!r}", path=path, line=lineno_of[nxt])
            if color[nxt] == WHITE:
                color[nxt] = GRAY
                stack.append((nxt, 0))


def information_content(tax: Taxonomy, concept: str) -> float:
    """-ln(count(concept) / total). Zero for a root carrying the full total."""
    try:
        return tax.ic[concept]
    except KeyError:
        raise KeyError(f"unknown concept id: {concept!r}") from None


def lowest_common_subsumer(tax: Taxonomy, c1: str, c2: str) -> str:
    """Common ancestor with maximal information content; ties take the smallest id."""
    common = tax.ancestors(c1) & tax.ancestors(c2)
    return min(common, key=lambda c: (-tax.ic[c], c))


def lin_similarity(tax: Taxonomy, w1: str, w2: str) -> float:
    """Lin score maximized over all sense pairs of the two words, in [0, 1].

    Out-of-vocabulary words score 0, as does any sense pair whose combined
    information content is zero.
    """
    key = (w1, w2) if w1 <= w2 else (w2, w1)
    cached = tax._pair_cache.get(key)
    if cached is not None:
        return cached
    senses1 = tax.lemma_index.get(w1)
    senses2 = tax.lemma_index.get(w2)
    best = 0.0
    if senses1 and senses2:
        for c1 in senses1:
            ic1 = tax.ic[c1]
            anc1 = tax.ancestors(c1)
            for c2 in senses2:
                denom = ic1 + tax.ic[c2]
                if denom <= 0.0:
                    continue
                common = anc1 & tax.ancestors(c2)
                ic_lcs = max(tax.ic[c] for c in common)
                score = 2.0 * ic_lcs / denom
                if score > best:
                    best = score
    tax._pair_cache[key] = best
    return best
