"""Deterministic train/test partitioning."""

from __future__ import annotations

import math
import random


class EmptyDataset(ValueError):
    pass


def split_dataset(rows: list, train_fraction: float, seed: int) -> tuple[list, list]:
    """Shuffle ``rows`` with ``seed`` and split: the first
    floor(train_fraction * N) shuffled rows train, the rest test.

    The same (rows, fraction, seed) always produces the same partition;
    train and test are disjoint by position and together cover the input.
    """
    if not rows:
        raise EmptyDataset("cannot split an empty dataset")
    if not 0.0 < train_fraction < 1.0:
        raise ValueError("train_fraction must be in (0, 1)")
    order = list(range(len(rows)))
    random.Random(seed).shuffle(order)
    cut = math.floor(train_fraction * len(rows))
    train = [rows[i] for i in order[:cut]]
    test = [rows[i] for i in order[cut:]]
    return train, test
