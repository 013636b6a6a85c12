from .boosting import (
    GbdtConfig,
    GbdtModel,
    GradientBoostedTreesClassifier,
    InvalidConfig,
    Tree,
    gbdt_predict,
    gbdt_predict_batch,
    train_gbdt,
)
from .datasets import (
    DatasetFormatError,
    LabeledFeatureDataset,
    LabeledTextDataset,
    load_phishing_csv,
    load_spam_csv,
)
from .metrics import DegenerateLabels, LengthMismatch, MetricsReport, evaluate, roc_auc
from .naive_bayes import (
    MultinomialNbClassifier,
    NbModel,
    NonPositiveAlpha,
    SingleClassDataset,
    VocabularySizeMismatch,
    nb_positive_probability,
    nb_predict,
    nb_scores,
    train_multinomial_nb,
)
from .split import EmptyDataset, split_dataset

__all__ = [
    "GbdtConfig",
    "GbdtModel",
    "GradientBoostedTreesClassifier",
    "InvalidConfig",
    "Tree",
    "gbdt_predict",
    "gbdt_predict_batch",
    "train_gbdt",
    "DatasetFormatError",
    "LabeledFeatureDataset",
    "LabeledTextDataset",
    "load_phishing_csv",
    "load_spam_csv",
    "DegenerateLabels",
    "LengthMismatch",
    "MetricsReport",
    "evaluate",
    "roc_auc",
    "MultinomialNbClassifier",
    "NbModel",
    "NonPositiveAlpha",
    "SingleClassDataset",
    "VocabularySizeMismatch",
    "nb_positive_probability",
    "nb_predict",
    "nb_scores",
    "train_multinomial_nb",
    "EmptyDataset",
    "split_dataset",
]
