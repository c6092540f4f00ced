"""Supervised term weighting from document class-label statistics.

For every term w the corpus splits into the collections DC_1 (documents
containing w), DC_0 (documents lacking it), and DC_* (all documents).
Counting class labels over each collection and normalizing gives three
distributions whose certainty and uncertainty drive the weights:

    PCF(w)     = T(DC_1) - T(DC_*)          troenpy-based class weight
    NCF_10(w)  = H(DC_1) - H(DC_0)          entropy-based variants
    NCF_1*(w)  = H(DC_1) - H(DC_*)
    NCF_*0(w)  = H(DC_*) - H(DC_0)
    IDF(w)     = 1 + log(n / (1 + d))       n docs, d containing w

Presence is binary per document.  A term present in every document leaves
DC_0 empty; the entropy/troenpy of an empty collection is 0 by convention.
Counts can optionally be Laplace-smoothed (add alpha to every class count
before normalizing), which keeps all weights finite without the clamp.

Document vectors multiply raw term frequency by IDF and a scheme factor
(1, PCF, or an NCF variant) and are L2-normalized, so downstream cosine
similarity sees only the direction.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence, TextIO

import numpy as np

from .core import DEFAULT_LOG, Distribution, LogConfig, entropy, troenpy
from .corpus import Corpus, Document, Vocabulary, LabelSet
from .errors import DomainError, ValidationError

#: Weighting schemes accepted by :func:`vectorize`; the starred names have
#: ASCII aliases tf-ncf1star / tf-ncfstar0.
SCHEMES = ("tf-idf", "tf-pi", "tf-ncf10", "tf-ncf1*", "tf-ncf*0")
_SCHEME_ALIASES = {
    "tf-ncf1star": "tf-ncf1*",
    "tf-ncfstar0": "tf-ncf*0",
}
NCF_VARIANTS = ("10", "1*", "*0")
_VARIANT_ALIASES = {"1star": "1*", "star0": "*0"}
NEGATIVES_POLICIES = ("raw", "clamp0")


def canonical_scheme(name: str) -> str:
    s = name.strip().lower()
    s = _SCHEME_ALIASES.get(s, s)
    if s not in SCHEMES:
        raise DomainError(f"unknown weighting scheme {name!r}; expected one of {SCHEMES}")
    return s


@dataclass(frozen=True)
class ClassCounts:
    """Per-class document counts for every term of a labeled document set.

    ct_1[w, c] counts documents of class c containing term w; ct_star[c]
    counts all documents of class c.  The complementary ct_0 and the
    document frequency df follow by arithmetic.
    """

    ct_1: np.ndarray  # (M, K) int64
    ct_star: np.ndarray  # (K,) int64
    n_documents: int
    vocabulary: Vocabulary
    labels: LabelSet

    @property
    def df(self) -> np.ndarray:
        """Documents containing each term (binary presence)."""
        return self.ct_1.sum(axis=1)

    @property
    def ct_0(self) -> np.ndarray:
        """Per-class counts of documents lacking each term."""
        return self.ct_star[np.newaxis, :] - self.ct_1

    def __add__(self, other: "ClassCounts") -> "ClassCounts":
        """Merge counts from a disjoint partition of the same corpus."""
        if self.vocabulary is not other.vocabulary and self.vocabulary != other.vocabulary:
            raise ValidationError("cannot merge counts over different vocabularies")
        if self.labels is not other.labels and self.labels != other.labels:
            raise ValidationError("cannot merge counts over different label sets")
        return ClassCounts(
            self.ct_1 + other.ct_1,
            self.ct_star + other.ct_star,
            self.n_documents + other.n_documents,
            self.vocabulary,
            self.labels,
        )


def count_class_stats(corpus: Corpus) -> ClassCounts:
    """Single-pass document/class counting over a labeled corpus."""
    if not corpus.is_labeled:
        raise ValidationError("class statistics require a labeled corpus")
    m = len(corpus.vocabulary)
    k = len(corpus.labels)
    ct_1 = np.zeros((m, k), dtype=np.int64)
    ct_star = np.zeros(k, dtype=np.int64)
    for doc in corpus.documents:
        ct_star[doc.label] += 1
        unique = np.fromiter(set(doc.tokens), dtype=np.int64)
        ct_1[unique, doc.label] += 1
    return ClassCounts(ct_1, ct_star, corpus.n_documents, corpus.vocabulary, corpus.labels)


def idf(n: int, d: int, cfg: LogConfig = DEFAULT_LOG) -> float:
    """Inverse document frequency 1 + log(n / (1 + d)).

    n is the number of documents, d the number containing the term.  In a
    counted corpus d >= 1 for every vocabulary term; d = 0 is accepted
    here as the hypothetical floor, giving 1 + log(n).
    """
    if n < 1:
        raise DomainError(f"document count n must be >= 1, got {n}")
    if not 0 <= d <= n:
        raise DomainError(f"document frequency d must lie in [0, {n}], got {d}")
    return 1.0 + cfg.log(n / (1.0 + d))


def _collection_dist(counts: np.ndarray, smoothing: float | None) -> Distribution | None:
    """Normalize class counts to a distribution.

    Returns None for an empty collection (all-zero raw counts), whose
    entropy/troenpy are 0 by convention.  Laplace smoothing adds alpha to
    every class count of a non-empty collection before normalizing.
    """
    if int(counts.sum()) == 0:
        return None
    if smoothing is not None:
        if smoothing <= 0.0:
            raise DomainError(f"laplace alpha must be > 0, got {smoothing!r}")
        return Distribution.normalized(counts.astype(np.float64) + smoothing)
    return Distribution.normalized(counts.astype(np.float64))


def _troenpy_of(counts: np.ndarray, smoothing: float | None, cfg: LogConfig) -> float:
    dist = _collection_dist(counts, smoothing)
    return 0.0 if dist is None else troenpy(dist, cfg)


def _entropy_of(counts: np.ndarray, smoothing: float | None, cfg: LogConfig) -> float:
    dist = _collection_dist(counts, smoothing)
    return 0.0 if dist is None else entropy(dist, cfg)


def pcf(
    counts: ClassCounts,
    term: int,
    smoothing: float | None = None,
    cfg: LogConfig = DEFAULT_LOG,
) -> float:
    """Positive class frequency T(DC_1) - T(DC_*) for one term id."""
    ct_1 = counts.ct_1[term]
    if int(ct_1.sum()) == 0:
        raise ValidationError(
            f"term id {term} occurs in no counted document (df = 0)"
        )
    return _troenpy_of(ct_1, smoothing, cfg) - _troenpy_of(counts.ct_star, smoothing, cfg)


def ncf(
    counts: ClassCounts,
    term: int,
    variant: str,
    smoothing: float | None = None,
    cfg: LogConfig = DEFAULT_LOG,
) -> float:
    """Negative class frequency: entropy difference between collections.

    Variants: "10" -> H(DC_1) - H(DC_0); "1*" -> H(DC_1) - H(DC_*);
    "*0" -> H(DC_*) - H(DC_0).
    """
    variant = _VARIANT_ALIASES.get(variant, variant)
    if variant not in NCF_VARIANTS:
        raise DomainError(f"unknown NCF variant {variant!r}; expected one of {NCF_VARIANTS}")
    ct_1 = counts.ct_1[term]
    if int(ct_1.sum()) == 0:
        raise ValidationError(
            f"term id {term} occurs in no counted document (df = 0)"
        )
    if variant == "10":
        return _entropy_of(ct_1, smoothing, cfg) - _entropy_of(
            counts.ct_0[term], smoothing, cfg
        )
    if variant == "1*":
        return _entropy_of(ct_1, smoothing, cfg) - _entropy_of(
            counts.ct_star, smoothing, cfg
        )
    return _entropy_of(counts.ct_star, smoothing, cfg) - _entropy_of(
        counts.ct_0[term], smoothing, cfg
    )


@dataclass(frozen=True)
class TermWeights:
    """Per-term weight table computed from one set of class counts.

    Terms absent from the counted documents (df = 0, possible when counts
    come from a train split) carry no weights and are skipped during
    vectorization.
    """

    vocabulary: Vocabulary
    df: np.ndarray  # (M,) int64; 0 marks an absent term
    idf: np.ndarray  # (M,) float64
    pcf: np.ndarray
    ncf10: np.ndarray
    ncf1star: np.ndarray
    ncfstar0: np.ndarray
    n_documents: int

    def has(self, term: int) -> bool:
        return bool(self.df[term] > 0)


def compute_term_weights(
    counts: ClassCounts,
    smoothing: float | None = None,
    cfg: LogConfig = DEFAULT_LOG,
) -> TermWeights:
    """Evaluate df/IDF/PCF/NCF for every term present in the counts."""
    m = counts.ct_1.shape[0]
    df = counts.df
    idf_arr = np.zeros(m)
    pcf_arr = np.zeros(m)
    ncf10_arr = np.zeros(m)
    ncf1star_arr = np.zeros(m)
    ncfstar0_arr = np.zeros(m)
    t_star = _troenpy_of(counts.ct_star, smoothing, cfg)
    h_star = _entropy_of(counts.ct_star, smoothing, cfg)
    n = counts.n_documents
    ct_0 = counts.ct_0
    for t in range(m):
        d = int(df[t])
        if d == 0:
            continue
        idf_arr[t] = idf(n, d, cfg)
        h_1 = _entropy_of(counts.ct_1[t], smoothing, cfg)
        h_0 = _entropy_of(ct_0[t], smoothing, cfg)
        pcf_arr[t] = _troenpy_of(counts.ct_1[t], smoothing, cfg) - t_star
        ncf10_arr[t] = h_1 - h_0
        ncf1star_arr[t] = h_1 - h_star
        ncfstar0_arr[t] = h_star - h_0
    return TermWeights(
        counts.vocabulary, df, idf_arr, pcf_arr, ncf10_arr, ncf1star_arr,
        ncfstar0_arr, n,
    )


def _scheme_factors(weights: TermWeights, scheme: str) -> np.ndarray | None:
    if scheme == "tf-idf":
        return None  # factor 1
    if scheme == "tf-pi":
        return weights.pcf
    if scheme == "tf-ncf10":
        return weights.ncf10
    if scheme == "tf-ncf1*":
        return weights.ncf1star
    return weights.ncfstar0


def vectorize(
    document: Document | Sequence[int],
    weights: TermWeights,
    scheme: str,
    negatives: str = "raw",
) -> dict[int, float]:
    """Weighted, L2-normalized sparse vector for one document.

    Each entry is tf(w) * idf(w) * factor(w) where tf is the raw
    in-document count and factor depends on the scheme (1 for tf-idf, PCF
    for tf-pi, the chosen NCF otherwise).  With negatives="clamp0",
    negative factors are replaced by 0.  Terms without weights (df = 0 in
    the counted split) are skipped; an all-zero result stays the empty
    vector.
    """
    scheme = canonical_scheme(scheme)
    if negatives not in NEGATIVES_POLICIES:
        raise DomainError(
            f"unknown negatives policy {negatives!r}; expected one of {NEGATIVES_POLICIES}"
        )
    tokens = document.tokens if isinstance(document, Document) else document
    factors = _scheme_factors(weights, scheme)
    entries: dict[int, float] = {}
    for term, tf in Counter(tokens).items():
        if term >= weights.df.size or weights.df[term] == 0:
            continue
        factor = 1.0 if factors is None else float(factors[term])
        if negatives == "clamp0" and factor < 0.0:
            factor = 0.0
        value = tf * float(weights.idf[term]) * factor
        if value != 0.0:
            entries[term] = value
    norm = math.sqrt(math.fsum(v * v for v in entries.values()))
    if norm == 0.0:
        return {}
    return {t: v / norm for t, v in entries.items()}


WEIGHTS_TSV_HEADER = "term\tdf\tidf\tpcf\tncf10\tncf1star\tncfstar0"


def export_weights_tsv(
    weights: TermWeights, out: TextIO, comment: str | None = None
) -> None:
    """Write the weight table as TSV, terms in vocabulary-id order.

    Reals are formatted at 9 significant digits.  An optional comment line
    (prefixed with '#') is emitted before the header.
    """
    if comment is not None:
        out.write(f"# {comment}\n")
    out.write(WEIGHTS_TSV_HEADER + "\n")
    for t in range(weights.df.size):
        if weights.df[t] == 0:
            continue
        out.write(
            "%s\t%d\t%.9g\t%.9g\t%.9g\t%.9g\t%.9g\n"
            % (
                weights.vocabulary.term(t),
                weights.df[t],
                weights.idf[t],
                weights.pcf[t],
                weights.ncf10[t],
                weights.ncf1star[t],
                weights.ncfstar0[t],
            )
        )
