"""CSV dataset ingestion for the two training tasks.

Spam file: header row, then rows whose first two columns are (label,
text) with labels ham/spam; extra trailing columns are tolerated and
ignored. Phishing file: header row naming the raw-URL column, the numeric
feature columns, and the label column (values legitimate/phishing); the
header order defines the feature schema.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from ..features.schema import FeatureSchema, load_schema_from_dataset

SPAM_LABELS = ("ham", "spam")
PHISHING_LABELS = ("legitimate", "phishing")


class DatasetFormatError(ValueError):
    pass


@dataclass(frozen=True)
class LabeledTextDataset:
    rows: tuple[tuple[str, str], ...]  # (raw text, label)


@dataclass(frozen=True)
class LabeledFeatureDataset:
    schema: FeatureSchema
    X: np.ndarray
    labels: tuple[str, ...]
    urls: tuple[str, ...]


def _read_rows(path) -> list[list[str]]:
    # The widely-circulated spam CSV is latin-1; try strict UTF-8 first.
    for encoding in ("utf-8", "latin-1"):
        try:
            with open(path, newline="", encoding=encoding) as fh:
                return list(csv.reader(fh))
        except UnicodeDecodeError:
            continue
    raise DatasetFormatError(f"cannot decode {path}")


def load_spam_csv(path) -> LabeledTextDataset:
    rows = _read_rows(path)
    if not rows:
        raise DatasetFormatError(f"{path}: empty file")
    data = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) < 2:
            raise DatasetFormatError(f"{path}:{lineno}: need (label, text)")
        label, text = row[0].strip(), row[1]
        if label not in SPAM_LABELS:
            raise DatasetFormatError(
                f"{path}:{lineno}: label {label!r} not in {SPAM_LABELS}")
        data.append((text, label))
    if not data:
        raise DatasetFormatError(f"{path}: no data rows")
    return LabeledTextDataset(rows=tuple(data))


def load_phishing_csv(path, label_column: str = "status",
                      url_column: str = "url") -> LabeledFeatureDataset:
    rows = _read_rows(path)
    if not rows:
        raise DatasetFormatError(f"{path}: empty file")
    header = rows[0]
    schema = load_schema_from_dataset(header, label_column)
    label_idx = header.index(label_column)
    url_idx = header.index(url_column) if url_column in header else None
    feature_idx = [i for i, col in enumerate(header)
                   if col != label_column and i != url_idx]
    X_rows, labels, urls = [], [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != len(header):
            raise DatasetFormatError(
                f"{path}:{lineno}: {len(row)} fields, header has {len(header)}")
        label = row[label_idx].strip()
        if label not in PHISHING_LABELS:
            raise DatasetFormatError(
                f"{path}:{lineno}: label {label!r} not in {PHISHING_LABELS}")
        try:
            X_rows.append([float(row[i]) for i in feature_idx])
        except ValueError as exc:
            raise DatasetFormatError(f"{path}:{lineno}: {exc}") from exc
        labels.append(label)
        urls.append(row[url_idx] if url_idx is not None else "")
    if not X_rows:
        raise DatasetFormatError(f"{path}: no data rows")
    return LabeledFeatureDataset(schema=schema,
                                 X=np.asarray(X_rows, dtype=np.float64),
                                 labels=tuple(labels), urls=tuple(urls))
