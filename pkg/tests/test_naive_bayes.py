import math

import pytest

from threatlens.models.errors import SingleClassDataset
from threatlens.models.naive_bayes import (
    MultinomialNbClassifier,
    NonPositiveAlpha,
    VocabularySizeMismatch,
    nb_positive_probability,
    nb_predict,
    nb_row_sums,
    nb_scores,
    train_multinomial_nb,
)
from threatlens.text.tokenizer import preprocess
from threatlens.text.vectorize import TermCountVector, Vocabulary, build_vocabulary, vectorize


def _vec(vocab, tokens):
    return vectorize(tokens, vocab)


# The four-document corpus used across these tests. After stemming:
# buy -> bui, pills -> pill, meeting -> meet; the rest are unchanged.
CORPUS = [
    ("buy cheap pills", "spam"),
    ("meeting at noon", "ham"),
    ("cheap pills now", "spam"),
    ("lunch at noon", "ham"),
]


def _train_corpus(alpha=1.0):
    tokens = [(preprocess(text), label) for text, label in CORPUS]
    vocab = build_vocabulary([t for t, _ in tokens])
    rows = [(_vec(vocab, t), label) for t, label in tokens]
    return train_multinomial_nb(rows, vocab, alpha=alpha), vocab


def test_log_prior_is_class_frequency():
    model, _ = _train_corpus()
    priors = dict(zip(model.classes, model.log_priors))
    assert priors["spam"] == pytest.approx(math.log(0.5), abs=1e-12)
    assert priors["ham"] == pytest.approx(math.log(0.5), abs=1e-12)


def test_likelihoods_match_hand_computed_smoothed_ratios():
    # Brute-force oracle: direct evaluation of (T_ct + 1) / (T_c + |V|).
    # Vocabulary (first occurrence): bui cheap pill meet at noon now lunch
    # spam term totals: bui 1, cheap 2, pill 2, now 1      (T_spam = 6)
    # ham  term totals: meet 1, at 2, noon 2, lunch 1      (T_ham = 6)
    model, vocab = _train_corpus(alpha=1.0)
    v = len(vocab)  # 8
    assert v == 8
    spam_totals = {"bui": 1, "cheap": 2, "pill": 2, "now": 1}
    ham_totals = {"meet": 1, "at": 2, "noon": 2, "lunch": 1}
    for ci, cls in enumerate(model.classes):
        totals = spam_totals if cls == "spam" else ham_totals
        for term, idx in vocab.index.items():
            expected = math.log((totals.get(term, 0) + 1.0) / (6.0 + v))
            assert model.log_likelihoods[ci, idx] == pytest.approx(expected, abs=1e-12), (cls, term)


def test_likelihood_rows_sum_to_one():
    model, _ = _train_corpus()
    for row_sum in nb_row_sums(model):
        assert row_sum == pytest.approx(1.0, abs=1e-9)
    assert math.fsum(math.exp(p) for p in model.log_priors) == pytest.approx(1.0, abs=1e-9)


def test_cheap_pills_is_spam_by_brute_force_posterior():
    model, vocab = _train_corpus()
    vector = _vec(vocab, preprocess("cheap pills"))
    label, scores = nb_predict(model, vector)
    # oracle: log P(c) + sum_t count * log P(t|c), computed longhand
    expected_spam = math.log(0.5) + math.log(3 / 14) + math.log(3 / 14)
    expected_ham = math.log(0.5) + math.log(1 / 14) + math.log(1 / 14)
    assert scores["spam"] == pytest.approx(expected_spam, abs=1e-9)
    assert scores["ham"] == pytest.approx(expected_ham, abs=1e-9)
    assert label == "spam"


def test_empty_vector_falls_back_to_priors():
    model, vocab = _train_corpus()
    label, scores = nb_predict(model, TermCountVector(len(vocab), {}))
    assert scores["spam"] == pytest.approx(math.log(0.5), abs=1e-12)
    assert scores["ham"] == pytest.approx(math.log(0.5), abs=1e-12)
    assert label == "ham"  # tie breaks toward ham


def test_tie_breaks_toward_first_class():
    vocab = Vocabulary(("x",))
    rows = [(TermCountVector(1, {0: 1}), "ham"), (TermCountVector(1, {0: 1}), "spam")]
    model = train_multinomial_nb(rows, vocab)
    label, scores = nb_predict(model, TermCountVector(1, {0: 3}))
    assert scores["ham"] == scores["spam"]
    assert label == "ham"


def test_mathematical_tie_with_different_factorizations_goes_ham():
    # posterior ham = 1/3 * 1/2, posterior spam = 2/3 * 1/4: an exact tie
    # whose float log scores differ by one ulp; must still resolve to ham
    vocab = Vocabulary(("a", "b"))
    rows = [
        (TermCountVector(2, {}), "ham"),
        (TermCountVector(2, {1: 3}), "spam"),
        (TermCountVector(2, {0: 1, 1: 2}), "spam"),
    ]
    model = train_multinomial_nb(rows, vocab)
    label, scores = nb_predict(model, TermCountVector(2, {0: 1}))
    assert abs(scores["spam"] - scores["ham"]) < 1e-12
    assert scores["spam"] != scores["ham"]  # the ulp gap this guards against
    assert label == "ham"


def test_alpha_validation():
    _, vocab = _train_corpus()
    rows = [(TermCountVector(8, {0: 1}), "spam"), (TermCountVector(8, {1: 1}), "ham")]
    with pytest.raises(NonPositiveAlpha):
        train_multinomial_nb(rows, vocab, alpha=0.0)


def test_single_class_rejected():
    vocab = Vocabulary(("x",))
    rows = [(TermCountVector(1, {0: 1}), "spam")]
    with pytest.raises(SingleClassDataset):
        train_multinomial_nb(rows, vocab)


def test_vocabulary_size_mismatch():
    model, _ = _train_corpus()
    with pytest.raises(VocabularySizeMismatch):
        nb_scores(model, TermCountVector(3, {0: 1}))


def test_positive_probability_consistent_with_scores():
    model, vocab = _train_corpus()
    vector = _vec(vocab, preprocess("cheap pills now"))
    scores = nb_scores(model, vector)
    p_spam = nb_positive_probability(model, vector, "spam")
    expected = 1.0 / (1.0 + math.exp(scores["ham"] - scores["spam"]))
    assert p_spam == pytest.approx(expected, abs=1e-12)
    assert (p_spam > 0.5) == (scores["spam"] > scores["ham"])


def test_estimator_facade_matches_functions():
    tokens = [(preprocess(text), label) for text, label in CORPUS]
    vocab = build_vocabulary([t for t, _ in tokens])
    X = [_vec(vocab, t) for t, _ in tokens]
    y = [label for _, label in tokens]
    clf = MultinomialNbClassifier(alpha=1.0).fit(X, y, vocabulary=vocab)
    assert clf.classes_ == ("ham", "spam")
    assert clf.predict(X) == [label for _, label in CORPUS]
    assert clf.get_params() == {"alpha": 1.0}
