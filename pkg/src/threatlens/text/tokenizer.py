"""Text normalization for the spam pipeline: lowercase, tokenize, stats.

Tokens are maximal runs of alphanumeric characters from the lowercased
text; every other character separates. Sentences are maximal segments
terminated by '.', '!' or '?'; a trailing unterminated nonempty segment
counts as one.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .porter import porter_stem

_TOKEN_RE = re.compile(r"[a-z0-9]+")
_SENTENCE_END_RE = re.compile(r"[.!?]")


class TextStats(NamedTuple):
    num_characters: int
    num_words: int
    num_sentences: int


def normalize_and_tokenize(text: str) -> list[str]:
    return _TOKEN_RE.findall(text.lower())


def compute_text_stats(text: str) -> TextStats:
    tokens = normalize_and_tokenize(text)
    # A segment counts as a sentence only when it carries at least one
    # token; this keeps num_sentences <= num_words for token-bearing text.
    sentences = sum(
        1 for segment in _SENTENCE_END_RE.split(text)
        if _TOKEN_RE.search(segment.lower())
    )
    return TextStats(
        num_characters=len(text),
        num_words=len(tokens),
        num_sentences=sentences,
    )


def preprocess(text: str) -> list[str]:
    """Lowercase, tokenize and stem; the canonical spam-model input."""
    return [porter_stem(token) for token in normalize_and_tokenize(text)]


def rejoin(tokens: list[str]) -> str:
    """Single-space joined form of a token list, for display and logging."""
    return " ".join(tokens)
