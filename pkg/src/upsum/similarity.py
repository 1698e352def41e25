"""Similarity measures used for scoring and redundancy detection.

Query relevance combines a cosine over raw term-frequency vectors with a
query-to-sentence Jaro-Winkler matching score; redundancy between sentences
is a normalized longest-common-substring measure over processed tokens.
All values are in [0, 1].
"""

from __future__ import annotations

from collections import Counter
from math import sqrt
from typing import Iterable, Mapping, Sequence

from .kernels import jaro, jaro_winkler, jw_extended, lcs_length, lcs_norm, max_lcs_norm

__all__ = [
    "TermVector",
    "cosine",
    "jaro",
    "jaro_winkler",
    "jw_extended",
    "lcs_length",
    "lcs_norm",
    "max_lcs_norm",
    "sim1",
]


class TermVector:
    """Sparse bag-of-tokens vector with raw term frequencies (no idf)."""

    __slots__ = ("counts", "norm")

    def __init__(self, counts: Mapping[str, int]):
        self.counts: dict[str, int] = {t: int(c) for t, c in counts.items() if c > 0}
        self.norm: float = sqrt(sum(c * c for c in self.counts.values()))

    @classmethod
    def from_tokens(cls, tokens: Iterable[str]) -> "TermVector":
        return cls(Counter(tokens))

    def __len__(self) -> int:
        return len(self.counts)

    def __repr__(self) -> str:
        return f"TermVector({self.counts!r})"


def cosine(a: TermVector, b: TermVector) -> float:
    """Cosine of two term vectors; 0.0 when either vector is empty."""
    if a.norm == 0.0 or b.norm == 0.0:
        return 0.0
    if len(a.counts) > len(b.counts):
        a, b = b, a
    dot = 0
    for token, count in a.counts.items():
        other = b.counts.get(token)
        if other:
            dot += count * other
    if dot == 0:
        return 0.0
    return dot / (a.norm * b.norm)


def sim1(
    sentence_tokens: Sequence[str],
    query_tokens: Sequence[str],
    alpha: float,
    *,
    sentence_vector: TermVector | None = None,
    query_vector: TermVector | None = None,
) -> float:
    """Query relevance: alpha * cosine + (1 - alpha) * jw_extended.

    Precomputed term vectors may be passed to avoid rebuilding them in
    scoring loops (the query vector in particular is shared by every
    candidate sentence).
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha!r}")
    sv = sentence_vector if sentence_vector is not None else TermVector.from_tokens(sentence_tokens)
    qv = query_vector if query_vector is not None else TermVector.from_tokens(query_tokens)
    return alpha * cosine(sv, qv) + (1.0 - alpha) * jw_extended(sentence_tokens, query_tokens)
