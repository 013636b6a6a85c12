"""Binary evaluation metrics: confusion counts, accuracy, precision,
recall, F1 and rank-based ROC AUC."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class LengthMismatch(ValueError):
    pass


class DegenerateLabels(ValueError):
    """Both a positive and a negative example are required."""


@dataclass(frozen=True)
class MetricsReport:
    accuracy: float
    precision: float
    recall: float
    f1: float
    roc_auc: float
    tp: int
    fp: int
    tn: int
    fn: int

    def as_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "roc_auc": self.roc_auc,
            "tp": self.tp,
            "fp": self.fp,
            "tn": self.tn,
            "fn": self.fn,
        }


def roc_auc(scores: list[float], labels: list[int]) -> float:
    """Probability that a random positive outscores a random negative,
    ties counting one half (the normalized Mann-Whitney statistic).

    Computed by average ranks, which matches pairwise enumeration exactly
    because all quantities involved are half-integers.
    """
    if len(scores) != len(labels):
        raise LengthMismatch(f"{len(scores)} scores vs {len(labels)} labels")
    y = np.asarray(labels)
    s = np.asarray(scores, dtype=np.float64)
    n_pos = int((y == 1).sum())
    n_neg = int((y == 0).sum())
    if n_pos == 0 or n_neg == 0:
        raise DegenerateLabels("need at least one positive and one negative")
    order = np.argsort(s, kind="mergesort")
    ranks = np.empty(len(s), dtype=np.float64)
    sorted_scores = s[order]
    i = 0
    while i < len(s):
        j = i
        while j + 1 < len(s) and sorted_scores[j + 1] == sorted_scores[i]:
            j += 1
        # average rank (1-based) over the tie group
        ranks[order[i:j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    rank_sum_pos = float(ranks[y == 1].sum())
    u = rank_sum_pos - n_pos * (n_pos + 1) / 2.0
    return u / (n_pos * n_neg)


def evaluate(scores: list[float], predictions: list, labels: list,
             positive_class) -> MetricsReport:
    """Confusion counts plus derived metrics with ``positive_class`` as
    the positive label. Precision is 1.0 by convention when nothing is
    predicted positive."""
    if not (len(scores) == len(predictions) == len(labels)):
        raise LengthMismatch(
            f"lengths differ: {len(scores)} scores, {len(predictions)} "
            f"predictions, {len(labels)} labels")
    if not labels:
        raise LengthMismatch("empty inputs")
    tp = fp = tn = fn = 0
    for pred, label in zip(predictions, labels):
        if label == positive_class:
            if pred == positive_class:
                tp += 1
            else:
                fn += 1
        else:
            if pred == positive_class:
                fp += 1
            else:
                tn += 1
    total = tp + fp + tn + fn
    accuracy = (tp + tn) / total
    precision = tp / (tp + fp) if (tp + fp) > 0 else 1.0
    recall = tp / (tp + fn) if (tp + fn) > 0 else 0.0
    f1 = (2 * precision * recall / (precision + recall)
          if (precision + recall) > 0 else 0.0)
    auc = roc_auc(scores, [int(label == positive_class) for label in labels])
    return MetricsReport(accuracy, precision, recall, f1, auc, tp, fp, tn, fn)
