"""Corpus ingestion: tokenization, vocabularies, labels, and splits.

Documents are stored as dense term-id sequences against an insertion-
ordered vocabulary, so re-loading the same files always reproduces the
same ids.  Splits are drawn from a counter-based generator keyed by
(seed, repeat_index) and are exact partitions of the document indices.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CorpusFormatError, DomainError, ValidationError
from .rng import rng_for

logger = logging.getLogger(__name__)

CORPUS_FORMATS = ("tsv", "dir-per-class", "plain-lines")

# Word tokens are maximal runs of Unicode alphanumerics (underscore counts
# as punctuation); punctuation tokens are maximal runs of everything else
# that is not whitespace.
_WORD_RE = re.compile(r"[^\W_]+", re.UNICODE)
_WORD_OR_PUNCT_RE = re.compile(r"[^\W_]+|[^\w\s]+|_+", re.UNICODE)


@dataclass(frozen=True)
class TokenizerConfig:
    """Switches for :func:`tokenize`.

    lowercase: fold case before splitting (set False to keep case).
    keep_punctuation: emit punctuation runs as tokens instead of dropping
        them.
    min_token_length: drop tokens shorter than this many characters.
    """

    lowercase: bool = True
    keep_punctuation: bool = False
    min_token_length: int = 1

    def __post_init__(self) -> None:
        if self.min_token_length < 1:
            raise DomainError("min_token_length must be >= 1")


DEFAULT_TOKENIZER = TokenizerConfig()


def tokenize(text: str, cfg: TokenizerConfig = DEFAULT_TOKENIZER) -> list[str]:
    """Split text into tokens; the default pipeline lowercases and splits
    on any maximal run of non-alphanumeric characters."""
    if cfg.lowercase:
        text = text.lower()
    pattern = _WORD_OR_PUNCT_RE if cfg.keep_punctuation else _WORD_RE
    tokens = pattern.findall(text)
    if cfg.min_token_length > 1:
        tokens = [t for t in tokens if len(t) >= cfg.min_token_length]
    return tokens


class StringIndex:
    """Dense bidirectional string <-> id map in first-occurrence order."""

    __slots__ = ("_ids", "_strings")

    def __init__(self, strings: Iterable[str] = ()) -> None:
        self._ids: dict[str, int] = {}
        self._strings: list[str] = []
        for s in strings:
            self.add(s)

    def add(self, s: str) -> int:
        """Return the id of s, assigning the next dense id if new."""
        i = self._ids.get(s)
        if i is None:
            i = len(self._strings)
            self._ids[s] = i
            self._strings.append(s)
        return i

    def id(self, s: str) -> int:
        return self._ids[s]

    def get(self, s: str) -> int | None:
        return self._ids.get(s)

    def string(self, i: int) -> str:
        return self._strings[i]

    def __contains__(self, s: str) -> bool:
        return s in self._ids

    def __len__(self) -> int:
        return len(self._strings)

    def __iter__(self) -> Iterator[str]:
        return iter(self._strings)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, StringIndex) and self._strings == other._strings


class Vocabulary(StringIndex):
    """Term <-> term-id map."""

    def term(self, i: int) -> str:
        return self.string(i)


class LabelSet(StringIndex):
    """Class label <-> class-id map."""

    def label(self, i: int) -> str:
        return self.string(i)


@dataclass(frozen=True)
class Document:
    """A tokenized document: term ids plus an optional class id."""

    tokens: tuple[int, ...]
    label: int | None = None


@dataclass
class Corpus:
    """Tokenized documents with a shared vocabulary and optional labels."""

    documents: list[Document]
    vocabulary: Vocabulary
    labels: LabelSet | None = None
    dropped_empty: int = 0
    source: str | None = None
    fmt: str | None = None

    @property
    def n_documents(self) -> int:
        return len(self.documents)

    @property
    def is_labeled(self) -> bool:
        return self.labels is not None

    def subset(self, indices: Sequence[int]) -> "Corpus":
        """A view-like corpus over the given documents; the vocabulary and
        label set are shared, so ids stay comparable across subsets."""
        docs = [self.documents[int(i)] for i in indices]
        return Corpus(docs, self.vocabulary, self.labels)

    def tokens_of(self, doc: Document) -> list[str]:
        return [self.vocabulary.term(t) for t in doc.tokens]

    def load_report(self) -> dict:
        """Machine-readable summary of what was loaded."""
        report: dict = {
            "source": self.source,
            "format": self.fmt,
            "documents": self.n_documents,
            "vocabulary_size": len(self.vocabulary),
            "dropped_empty_documents": self.dropped_empty,
            "labeled": self.is_labeled,
        }
        if self.labels is not None:
            counts = {label: 0 for label in self.labels}
            for doc in self.documents:
                counts[self.labels.label(doc.label)] += 1
            report["classes"] = len(self.labels)
            report["documents_per_class"] = counts
        return report

    @classmethod
    def from_tokens(
        cls,
        token_sequences: Iterable[Sequence[str]],
        labels: Iterable[str] | None = None,
    ) -> "Corpus":
        """Build a corpus from already-tokenized documents in memory."""
        vocab = Vocabulary()
        labelset = LabelSet() if labels is not None else None
        docs: list[Document] = []
        dropped = 0
        label_list = list(labels) if labels is not None else None
        seqs = list(token_sequences)
        if label_list is not None and len(label_list) != len(seqs):
            raise ValidationError("labels and token sequences differ in length")
        for i, seq in enumerate(seqs):
            if not seq:
                dropped += 1
                continue
            ids = tuple(vocab.add(t) for t in seq)
            lab = labelset.add(label_list[i]) if labelset is not None else None
            docs.append(Document(ids, lab))
        if not docs:
            raise ValidationError("empty corpus")
        if dropped:
            logger.info("dropped %d empty documents", dropped)
        return cls(docs, vocab, labelset, dropped_empty=dropped)


def _read_lines(path: Path) -> list[str]:
    return path.read_text(encoding="utf-8").splitlines()


def load_corpus(
    source, fmt: str, tokenizer: TokenizerConfig = DEFAULT_TOKENIZER
) -> Corpus:
    """Load a corpus from disk.

    Formats:
      tsv            one document per line, ``label<TAB>text``
      dir-per-class  one subdirectory per class, one file per document
      plain-lines    unlabeled, one sentence/document per line

    Document order is deterministic: file order (lexicographic for
    dir-per-class), then line order.  Documents that tokenize to nothing
    are dropped and counted.  An entirely empty corpus is an error.
    """
    if fmt not in CORPUS_FORMATS:
        raise DomainError(f"unknown corpus format {fmt!r}; expected one of {CORPUS_FORMATS}")
    path = Path(source)
    vocab = Vocabulary()
    docs: list[Document] = []
    dropped = 0

    if fmt == "tsv":
        labelset = LabelSet()
        for lineno, line in enumerate(_read_lines(path), start=1):
            if "\t" not in line:
                raise CorpusFormatError(
                    f"{path}:{lineno}: malformed TSV line (missing tab)"
                )
            label, text = line.split("\t", 1)
            tokens = tokenize(text, tokenizer)
            if not tokens:
                dropped += 1
                continue
            docs.append(
                Document(tuple(vocab.add(t) for t in tokens), labelset.add(label))
            )
        labels: LabelSet | None = labelset
    elif fmt == "dir-per-class":
        if not path.is_dir():
            raise CorpusFormatError(f"{path}: not a directory")
        labelset = LabelSet()
        for class_dir in sorted(p for p in path.iterdir() if p.is_dir()):
            label_id = None
            for doc_file in sorted(p for p in class_dir.iterdir() if p.is_file()):
                tokens = tokenize(doc_file.read_text(encoding="utf-8"), tokenizer)
                if not tokens:
                    dropped += 1
                    continue
                if label_id is None:
                    label_id = labelset.add(class_dir.name)
                docs.append(Document(tuple(vocab.add(t) for t in tokens), label_id))
        labels = labelset
    else:  # plain-lines
        for line in _read_lines(path):
            tokens = tokenize(line, tokenizer)
            if not tokens:
                dropped += 1
                continue
            docs.append(Document(tuple(vocab.add(t) for t in tokens)))
        labels = None

    if not docs:
        raise ValidationError(f"empty corpus: {path}")
    if dropped:
        logger.info("dropped %d empty documents from %s", dropped, path)
    return Corpus(docs, vocab, labels, dropped_empty=dropped, source=str(source), fmt=fmt)


@dataclass(frozen=True)
class SplitSpec:
    """Repeated random train/test split parameters.

    The same (seed, repeat_index) always yields the same split.  Splits
    are unstratified unless ``stratified`` is set.
    """

    train_fraction: float = 0.8
    repeats: int = 50
    seed: int = 0
    stratified: bool = False

    def __post_init__(self) -> None:
        if not 0.0 < self.train_fraction < 1.0:
            raise DomainError(
                f"train_fraction must lie in (0, 1), got {self.train_fraction!r}"
            )
        if self.repeats < 1:
            raise DomainError(f"repeats must be >= 1, got {self.repeats!r}")
        if not 0 <= int(self.seed) < 2**64:
            raise DomainError("seed must be a 64-bit unsigned integer")


def split(
    corpus: Corpus, spec: SplitSpec, repeat_index: int
) -> tuple[np.ndarray, np.ndarray]:
    """Deterministic (train_indices, test_indices) partition for one repeat.

    A uniform random permutation is drawn from the counter-based generator
    keyed by (seed, repeat_index); the first ceil(train_fraction * n)
    positions become the train set.  The two index arrays are disjoint and
    cover every document.
    """
    n = corpus.n_documents
    if n < 2:
        raise ValidationError(f"cannot split a corpus of {n} document(s)")
    if not 0 <= repeat_index < spec.repeats:
        raise DomainError(
            f"repeat_index must lie in [0, {spec.repeats}), got {repeat_index}"
        )
    rng = rng_for(spec.seed, repeat_index)
    if spec.stratified:
        if not corpus.is_labeled:
            raise ValidationError("stratified splits require a labeled corpus")
        train_parts: list[np.ndarray] = []
        test_parts: list[np.ndarray] = []
        by_class: dict[int, list[int]] = {}
        for i, doc in enumerate(corpus.documents):
            by_class.setdefault(doc.label, []).append(i)
        for label in sorted(by_class):
            idx = np.asarray(by_class[label], dtype=np.int64)
            perm = idx[rng.permutation(idx.size)]
            n_train = math.ceil(spec.train_fraction * idx.size)
            train_parts.append(perm[:n_train])
            test_parts.append(perm[n_train:])
        return np.concatenate(train_parts), np.concatenate(test_parts)
    perm = rng.permutation(n)
    n_train = math.ceil(spec.train_fraction * n)
    return perm[:n_train].copy(), perm[n_train:].copy()
