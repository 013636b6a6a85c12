"""Term vocabulary and count vectorization for the spam model.

The vocabulary fixes term-to-index assignments in first-occurrence order
over the training corpus; vectors are sparse index->count maps with
out-of-vocabulary tokens dropped.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from sklearn.base import BaseEstimator, TransformerMixin

from .tokenizer import preprocess


class EmptyVocabulary(ValueError):
    """No term reached the minimum corpus count."""


@dataclass(frozen=True)
class Vocabulary:
    terms: tuple[str, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {t: i for i, t in enumerate(self.terms)})
        if len(self.index) != len(self.terms):
            raise ValueError("duplicate terms in vocabulary")

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self.index


@dataclass(frozen=True)
class TermCountVector:
    size: int
    counts: dict[int, int]

    def __post_init__(self):
        for idx, count in self.counts.items():
            if not 0 <= idx < self.size:
                raise ValueError(f"index {idx} out of range for size {self.size}")
            if count < 1:
                raise ValueError(f"count for index {idx} must be positive")

    def total(self) -> int:
        return sum(self.counts.values())


def build_vocabulary(corpus: list[list[str]], min_count: int = 1) -> Vocabulary:
    """Vocabulary of terms with total corpus count >= min_count, ordered by
    first occurrence."""
    if not corpus:
        raise ValueError("corpus must be nonempty")
    totals: dict[str, int] = {}
    for tokens in corpus:
        for token in tokens:
            totals[token] = totals.get(token, 0) + 1
    terms = tuple(t for t in totals if totals[t] >= min_count)
    if not terms:
        raise EmptyVocabulary(f"no term appears {min_count}+ times")
    return Vocabulary(terms)


def vectorize(tokens: list[str], vocab: Vocabulary) -> TermCountVector:
    counts: dict[int, int] = {}
    for token in tokens:
        idx = vocab.index.get(token)
        if idx is not None:
            counts[idx] = counts.get(idx, 0) + 1
    return TermCountVector(size=len(vocab), counts=counts)


class StemmedCountVectorizer(BaseEstimator, TransformerMixin):
    """Lowercase + tokenize + stem + count-vectorize, as one transformer.

    ``fit`` learns the vocabulary from raw texts; ``transform`` maps raw
    texts to TermCountVector objects against that vocabulary.
    """

    def __init__(self, min_count: int = 1):
        self.min_count = min_count

    def fit(self, texts, y=None):
        self.vocabulary_ = build_vocabulary(
            [preprocess(t) for t in texts], min_count=self.min_count)
        return self

    def transform(self, texts):
        if not hasattr(self, "vocabulary_"):
            from sklearn.exceptions import NotFittedError
            raise NotFittedError("StemmedCountVectorizer is not fitted")
        return [vectorize(preprocess(t), self.vocabulary_) for t in texts]
