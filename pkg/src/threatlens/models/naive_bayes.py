"""Multinomial Naive Bayes over term-count vectors.

Laplace-smoothed term likelihoods per class, log-space scoring, ties
broken toward the first class in the model's class order (by convention
the non-harmful one, e.g. ham).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.exceptions import NotFittedError

from ..text.vectorize import TermCountVector, Vocabulary
from .errors import SingleClassDataset


class NonPositiveAlpha(ValueError):
    pass


class VocabularySizeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class NbModel:
    classes: tuple[str, ...]
    log_priors: np.ndarray          # shape (n_classes,)
    log_likelihoods: np.ndarray     # shape (n_classes, n_terms)
    vocabulary: Vocabulary
    alpha: float


def train_multinomial_nb(train: list[tuple[TermCountVector, str]],
                         vocab: Vocabulary, alpha: float = 1.0) -> NbModel:
    """Fit priors and smoothed term likelihoods.

    log_prior[c]      = log(docs in c / total docs)
    log_likelihood[c][t] = log((T_ct + alpha) / (sum_t' T_ct' + alpha * |V|))
    """
    if alpha <= 0:
        raise NonPositiveAlpha(f"alpha must be > 0, got {alpha}")
    labels = sorted({label for _, label in train})
    if len(labels) < 2:
        raise SingleClassDataset(f"need both classes, got {labels}")
    classes = tuple(labels)
    class_index = {c: i for i, c in enumerate(classes)}
    n_terms = len(vocab)
    term_counts = np.zeros((len(classes), n_terms), dtype=np.float64)
    doc_counts = np.zeros(len(classes), dtype=np.float64)
    for vector, label in train:
        if vector.size != n_terms:
            raise VocabularySizeMismatch(
                f"vector size {vector.size} != vocabulary size {n_terms}")
        ci = class_index[label]
        doc_counts[ci] += 1
        for idx, count in vector.counts.items():
            term_counts[ci, idx] += count
    log_priors = np.log(doc_counts / doc_counts.sum())
    totals = term_counts.sum(axis=1, keepdims=True)
    log_likelihoods = np.log(term_counts + alpha) - np.log(totals + alpha * n_terms)
    return NbModel(classes, log_priors, log_likelihoods, vocab, float(alpha))


def nb_scores(model: NbModel, vector: TermCountVector) -> dict[str, float]:
    """Per-class log scores: log prior plus count-weighted likelihoods.

    Summation uses fsum so symmetric corpora score symmetric inputs to
    bit-identical values, which keeps the declared tie-break meaningful.
    """
    if vector.size != model.log_likelihoods.shape[1]:
        raise VocabularySizeMismatch(
            f"vector size {vector.size} != model vocabulary size "
            f"{model.log_likelihoods.shape[1]}")
    scores = {}
    for ci, cls in enumerate(model.classes):
        row = model.log_likelihoods[ci]
        addends = [float(model.log_priors[ci])]
        addends.extend(count * float(row[idx])
                       for idx, count in vector.counts.items())
        scores[cls] = math.fsum(addends)
    return scores


#: Log-score differences at or below this are ties. Well above float
#: accumulation noise, far below any real evidence margin, and ties go to
#: the first (non-harmful) class, never toward an accusation.
TIE_EPSILON = 1e-12


def nb_predict(model: NbModel, vector: TermCountVector) -> tuple[str, dict[str, float]]:
    """Argmax label with ties broken toward the first class in order."""
    scores = nb_scores(model, vector)
    best = model.classes[0]
    for c in model.classes[1:]:
        if scores[c] > scores[best] + TIE_EPSILON:
            best = c
    return best, scores


def nb_positive_probability(model: NbModel, vector: TermCountVector,
                            positive_class: str) -> float:
    """Posterior probability of ``positive_class`` (softmax over log scores)."""
    scores = nb_scores(model, vector)
    values = np.array([scores[c] for c in model.classes])
    values -= values.max()
    probs = np.exp(values)
    probs /= probs.sum()
    return float(probs[model.classes.index(positive_class)])


class MultinomialNbClassifier(BaseEstimator, ClassifierMixin):
    """Estimator facade over the functional core.

    ``fit`` takes a list of TermCountVector plus labels; ``predict`` and
    ``predict_scores`` mirror nb_predict. Class order is sorted label
    order, which puts ham before spam.
    """

    def __init__(self, alpha: float = 1.0):
        self.alpha = alpha

    def fit(self, X: list[TermCountVector], y: list[str],
            vocabulary: Vocabulary | None = None):
        if vocabulary is None:
            raise ValueError("vocabulary is required to fit")
        self.model_ = train_multinomial_nb(list(zip(X, y)), vocabulary, self.alpha)
        self.classes_ = self.model_.classes
        return self

    def _check_fitted(self):
        if not hasattr(self, "model_"):
            raise NotFittedError("MultinomialNbClassifier is not fitted")

    def predict(self, X: list[TermCountVector]) -> list[str]:
        self._check_fitted()
        return [nb_predict(self.model_, v)[0] for v in X]

    def predict_scores(self, X: list[TermCountVector]) -> list[dict[str, float]]:
        self._check_fitted()
        return [nb_scores(self.model_, v) for v in X]

    def predict_positive_probability(self, X: list[TermCountVector],
                                     positive_class: str) -> list[float]:
        self._check_fitted()
        return [nb_positive_probability(self.model_, v, positive_class) for v in X]


def nb_row_sums(model: NbModel) -> list[float]:
    """exp-sum of each class's likelihood row; 1.0 up to float error."""
    return [float(math.fsum(math.exp(v) for v in row))
            for row in model.log_likelihoods]
