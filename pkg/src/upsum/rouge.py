"""Recall-oriented n-gram evaluation against reference summaries.

Scores are pooled over references: for each reference, candidate n-gram
counts are clipped to the reference counts and summed; the denominator is
the total n-gram count over all references. Tokenization for scoring is
lowercase alphanumeric runs, keeping stopwords, without stemming.
"""

from __future__ import annotations

import csv
import io
import re
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import EmptyReferencesError

__all__ = [
    "RougeReport",
    "evaluate_run",
    "ngrams",
    "rouge_n",
    "rouge_su4",
    "skip_bigrams",
    "tokenize",
]

_TOKEN = re.compile(r"[a-z0-9]+")

METRICS = ("rouge1", "rouge2", "rouge_su4")


def tokenize(text: str) -> list[str]:
    """Scoring tokenization: lowercase runs of letters and digits."""
    return _TOKEN.findall(text.lower())


def ngrams(tokens: Sequence[str], n: int) -> Counter:
    """All contiguous n-token windows with multiplicity."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n!r}")
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def skip_bigrams(tokens: Sequence[str], max_skip: int) -> Counter:
    """Ordered token pairs (i < j) with at most max_skip tokens between."""
    if max_skip < 0:
        raise ValueError(f"max_skip must be >= 0, got {max_skip!r}")
    counts: Counter = Counter()
    n = len(tokens)
    for i in range(n):
        hi = min(n, i + max_skip + 2)
        for j in range(i + 1, hi):
            counts[(tokens[i], tokens[j])] += 1
    return counts


def _clipped_recall(candidate: Counter, references: Sequence[Counter]) -> float:
    matched = 0
    total = 0
    for ref in references:
        total += sum(ref.values())
        for gram, count in ref.items():
            have = candidate.get(gram)
            if have:
                matched += have if have < count else count
    if total == 0:
        raise EmptyReferencesError("all references are empty; recall is undefined")
    return matched / total


def rouge_n(
    candidate: Sequence[str],
    references: Sequence[Sequence[str]],
    n: int,
) -> float:
    """Clipped n-gram recall of the candidate over pooled references."""
    return _clipped_recall(ngrams(candidate, n), [ngrams(r, n) for r in references])


def _su4_grams(tokens: Sequence[str]) -> Counter:
    grams = skip_bigrams(tokens, 4)
    grams.update(ngrams(tokens, 1))
    return grams


def rouge_su4(candidate: Sequence[str], references: Sequence[Sequence[str]]) -> float:
    """Clipped recall over the union of skip-bigrams (gap <= 4) and unigrams."""
    return _clipped_recall(_su4_grams(candidate), [_su4_grams(r) for r in references])


@dataclass(frozen=True)
class RougeReport:
    """Per-run scores: per (topic, set) values plus arithmetic means."""

    rouge1: float
    rouge2: float
    rouge_su4: float
    per_topic: dict[tuple[str, str], dict[str, float]]
    skipped: tuple[tuple[str, str], ...] = ()

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["topic_id", "set", "metric", "value"])
        for (topic_id, set_label) in sorted(self.per_topic):
            scores = self.per_topic[(topic_id, set_label)]
            for metric in METRICS:
                writer.writerow([topic_id, set_label, metric, f"{scores[metric]:.6f}"])
        for metric, value in zip(METRICS, (self.rouge1, self.rouge2, self.rouge_su4)):
            writer.writerow(["MEAN", "-", metric, f"{value:.6f}"])
        return out.getvalue()

    def format_table(self) -> str:
        lines = [f"{'topic':<16}{'set':<5}{'rouge1':>9}{'rouge2':>9}{'rouge_su4':>11}"]
        for (topic_id, set_label) in sorted(self.per_topic):
            scores = self.per_topic[(topic_id, set_label)]
            lines.append(
                f"{topic_id:<16}{set_label:<5}"
                f"{scores['rouge1']:>9.5f}{scores['rouge2']:>9.5f}{scores['rouge_su4']:>11.5f}"
            )
        lines.append(
            f"{'MEAN':<16}{'-':<5}{self.rouge1:>9.5f}{self.rouge2:>9.5f}{self.rouge_su4:>11.5f}"
        )
        if self.skipped:
            skipped = ", ".join(f"{t}.{s}" for t, s in self.skipped)
            lines.append(f"skipped (no references): {skipped}")
        return "\n".join(lines)


def evaluate_run(
    candidates: Mapping[tuple[str, str], str],
    references: Mapping[tuple[str, str], Sequence[str]],
) -> RougeReport:
    """Score candidate texts keyed by (topic_id, set) against reference texts.

    Topics without references are skipped and excluded from the means;
    scoring a run where nothing has references raises EmptyReferencesError.
    """
    per_topic: dict[tuple[str, str], dict[str, float]] = {}
    skipped: list[tuple[str, str]] = []
    for key in sorted(candidates):
        refs = [tokenize(r) for r in references.get(key, ())]
        refs = [r for r in refs if r]
        if not refs:
            skipped.append(key)
            continue
        cand = tokenize(candidates[key])
        per_topic[key] = {
            "rouge1": rouge_n(cand, refs, 1),
            "rouge2": rouge_n(cand, refs, 2),
            "rouge_su4": rouge_su4(cand, refs),
        }
    if not per_topic:
        raise EmptyReferencesError("no topic had a non-empty reference summary")
    means = {
        metric: sum(scores[metric] for scores in per_topic.values()) / len(per_topic)
        for metric in METRICS
    }
    return RougeReport(
        rouge1=means["rouge1"],
        rouge2=means["rouge2"],
        rouge_su4=means["rouge_su4"],
        per_topic=per_topic,
        skipped=tuple(skipped),
    )
