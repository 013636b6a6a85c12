from .porter import porter_stem
from .tokenizer import TextStats, compute_text_stats, normalize_and_tokenize, preprocess, rejoin
from .vectorize import (
    EmptyVocabulary,
    StemmedCountVectorizer,
    TermCountVector,
    Vocabulary,
    build_vocabulary,
    vectorize,
)

__all__ = [
    "porter_stem",
    "TextStats",
    "compute_text_stats",
    "normalize_and_tokenize",
    "preprocess",
    "rejoin",
    "EmptyVocabulary",
    "StemmedCountVectorizer",
    "TermCountVector",
    "Vocabulary",
    "build_vocabulary",
    "vectorize",
]
