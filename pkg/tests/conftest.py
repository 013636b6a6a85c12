from __future__ import annotations

import os
from pathlib import Path

import pytest

from threatlens.models.boosting import GbdtConfig, train_gbdt
from threatlens.models.datasets import load_phishing_csv, load_spam_csv
from threatlens.models.naive_bayes import train_multinomial_nb
from threatlens.service.bundle import make_bundle
from threatlens.text.tokenizer import preprocess
from threatlens.text.vectorize import build_vocabulary, vectorize

REPO_ROOT = Path(__file__).resolve().parents[1]
SAMPLES_DIR = REPO_ROOT / "data" / "samples"
DATA_DIR = Path(os.environ.get("THREATLENS_DATA_DIR", REPO_ROOT / "data"))

SPAM_DATASET = DATA_DIR / "spam.csv"
PHISHING_DATASET = DATA_DIR / "phishing.csv"


@pytest.fixture(scope="session")
def spam_sample_path() -> Path:
    return SAMPLES_DIR / "spam_sample.csv"


@pytest.fixture(scope="session")
def phishing_sample_path() -> Path:
    return SAMPLES_DIR / "phishing_sample.csv"


@pytest.fixture(scope="session")
def small_bundle(spam_sample_path, phishing_sample_path):
    """Bundle with both models trained on the 20-row samples; enough to
    exercise every serving path."""
    spam = load_spam_csv(spam_sample_path)
    tokens = [(preprocess(text), label) for text, label in spam.rows]
    vocab = build_vocabulary([t for t, _ in tokens])
    nb = train_multinomial_nb(
        [(vectorize(t, vocab), label) for t, label in tokens], vocab, alpha=1.0)

    phishing = load_phishing_csv(phishing_sample_path)
    y = [int(label == "phishing") for label in phishing.labels]
    gbdt = train_gbdt(phishing.X, y, phishing.schema,
                      GbdtConfig(n_trees=5, max_leaves=4, min_samples_leaf=1))
    return make_bundle(schema=phishing.schema, vocabulary=vocab,
                       nb_model=nb, gbdt_model=gbdt)
