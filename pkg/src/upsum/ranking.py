"""Sentence scoring and greedy budgeted selection.

The default scorer multiplies query relevance by a history non-redundancy
penalty raised to a novelty-factor exponent; no iterative re-ranking is
needed, so a sentence's score does not depend on what else gets selected.
MMR (iterative, penalizes similarity to already selected sentences) and NR
(relevance plus non-redundancy, additive) are kept as baselines.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date
from typing import Iterable, Sequence

from .corpus import History, Topic
from .preprocess import Sentence
from .similarity import TermVector, lcs_norm, max_lcs_norm, sim1

__all__ = [
    "RankingConfig",
    "ScoredSentence",
    "max_history_sim",
    "mmr_rank",
    "novelty_factor",
    "nr_rank",
    "rank_cluster",
    "select_for_summary",
    "select_sentences",
    "smmr_score",
]

SCORERS = ("smmr", "mmr", "nr")

_EPOCH = date.min


@dataclass(frozen=True, slots=True)
class RankingConfig:
    """Scoring and selection parameters.

    ``nf`` overrides the novelty-factor exponent; when None it is derived
    from the history as 1/c. ``lambda_`` is the interpolation coefficient of
    the MMR/NR baselines and is unused by the default scorer.
    """

    alpha: float = 0.7
    lambda_: float = 0.5
    nf: float | None = None
    word_budget: int = 100
    redundancy_threshold: float = 0.8
    lcs_denominator: str = "min"

    def __post_init__(self) -> None:
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {self.alpha!r}")
        if not 0.0 <= self.lambda_ <= 1.0:
            raise ValueError(f"lambda_ must be in [0, 1], got {self.lambda_!r}")
        if self.nf is not None and self.nf < 0.0:
            raise ValueError(f"nf must be >= 0, got {self.nf!r}")
        if self.word_budget < 1:
            raise ValueError(f"word_budget must be positive, got {self.word_budget!r}")
        if not 0.0 <= self.redundancy_threshold <= 1.0:
            raise ValueError(
                f"redundancy_threshold must be in [0, 1], got {self.redundancy_threshold!r}"
            )


@dataclass(frozen=True, slots=True)
class ScoredSentence:
    sentence: Sentence
    sim1: float
    max_hist_sim2: float
    score: float


def _order_key(sentence: Sentence) -> tuple[date, int, int]:
    # Deterministic tie-break: document date, document position, sentence index.
    return (sentence.timestamp or _EPOCH, sentence.doc_pos, sentence.index)


def novelty_factor(history: History, override: float | None = None) -> float:
    """1/c over the counted document sets, unless explicitly overridden."""
    if override is not None:
        return override
    return 1.0 / history.source_cluster_count


def max_history_sim(
    sentence: Sentence,
    history: History,
    denominator: str = "min",
) -> float:
    """Largest redundancy of the sentence with any history sentence (0 if none)."""
    return max_lcs_norm(
        sentence.tokens, [h.tokens for h in history.sentences], denominator
    )


def smmr_score(
    sentence: Sentence,
    topic: Topic,
    history: History,
    cfg: RankingConfig,
    *,
    query_vector: TermVector | None = None,
) -> ScoredSentence:
    """Relevance times the non-redundancy penalty (1 - maxSim2)^nf.

    0^0 is taken as 1, so a zero exponent always flattens the penalty and a
    verbatim duplicate of history scores 0 for any positive exponent.
    """
    nf = novelty_factor(history, cfg.nf)
    relevance = sim1(
        sentence.tokens, topic.query_tokens, cfg.alpha, query_vector=query_vector
    )
    redundancy = max_history_sim(sentence, history, cfg.lcs_denominator)
    base = 1.0 - redundancy
    penalty = 1.0 if nf == 0.0 else base**nf
    return ScoredSentence(sentence, relevance, redundancy, relevance * penalty)


def rank_cluster(
    sentences: Sequence[Sentence],
    topic: Topic,
    history: History,
    cfg: RankingConfig,
) -> list[ScoredSentence]:
    """Score every candidate and sort by score (ties by document order)."""
    query_vector = TermVector.from_tokens(topic.query_tokens)
    scored = [
        smmr_score(s, topic, history, cfg, query_vector=query_vector) for s in sentences
    ]
    scored.sort(key=lambda sc: _order_key(sc.sentence))
    scored.sort(key=lambda sc: sc.score, reverse=True)
    return scored


def select_sentences(
    ranked: Sequence[ScoredSentence],
    cfg: RankingConfig,
) -> list[ScoredSentence]:
    """Greedy scan of a ranked list under the word budget.

    A sentence is admitted when its redundancy with every already admitted
    sentence is below the threshold and its raw word count still fits; a
    sentence that does not fit is skipped and the scan continues, so total
    content under the budget is maximized.
    """
    admitted: list[ScoredSentence] = []
    total = 0
    for candidate in ranked:
        words = candidate.sentence.word_count
        if total + words > cfg.word_budget:
            continue
        if any(
            lcs_norm(candidate.sentence.tokens, kept.sentence.tokens, cfg.lcs_denominator)
            >= cfg.redundancy_threshold
            for kept in admitted
        ):
            continue
        admitted.append(candidate)
        total += words
    return admitted


def _mmr_scores(
    candidates: Sequence[Sentence],
    topic: Topic,
    selected: Sequence[Sentence],
    cfg: RankingConfig,
    query_vector: TermVector | None = None,
) -> list[ScoredSentence]:
    qv = query_vector if query_vector is not None else TermVector.from_tokens(topic.query_tokens)
    selected_tokens = [s.tokens for s in selected]
    scored = []
    for sentence in candidates:
        relevance = sim1(sentence.tokens, topic.query_tokens, cfg.alpha, query_vector=qv)
        redundancy = max_lcs_norm(sentence.tokens, selected_tokens, cfg.lcs_denominator)
        value = cfg.lambda_ * relevance - (1.0 - cfg.lambda_) * redundancy
        scored.append(ScoredSentence(sentence, relevance, redundancy, value))
    scored.sort(key=lambda sc: _order_key(sc.sentence))
    scored.sort(key=lambda sc: sc.score, reverse=True)
    return scored


def mmr_rank(
    candidates: Sequence[Sentence],
    topic: Topic,
    selected: Sequence[Sentence],
    cfg: RankingConfig,
) -> Sentence:
    """Best candidate by the iterative criterion lambda*Sim1 - (1-lambda)*maxSim2."""
    if not candidates:
        raise ValueError("mmr_rank needs at least one candidate")
    return _mmr_scores(candidates, topic, selected, cfg)[0].sentence


def _nr_scores(
    candidates: Sequence[Sentence],
    topic: Topic,
    history: History,
    cfg: RankingConfig,
) -> list[ScoredSentence]:
    query_vector = TermVector.from_tokens(topic.query_tokens)
    history_tokens = [h.tokens for h in history.sentences]
    scored = []
    for sentence in candidates:
        relevance = sim1(
            sentence.tokens, topic.query_tokens, cfg.alpha, query_vector=query_vector
        )
        redundancy = max_lcs_norm(sentence.tokens, history_tokens, cfg.lcs_denominator)
        value = cfg.lambda_ * relevance + (1.0 - cfg.lambda_) * (1.0 - redundancy)
        scored.append(ScoredSentence(sentence, relevance, redundancy, value))
    scored.sort(key=lambda sc: _order_key(sc.sentence))
    scored.sort(key=lambda sc: sc.score, reverse=True)
    return scored


def nr_rank(
    candidates: Sequence[Sentence],
    topic: Topic,
    history: History,
    cfg: RankingConfig,
) -> Sentence:
    """Best candidate by lambda*Sim1 + (1-lambda)*(1 - max history Sim2)."""
    if not candidates:
        raise ValueError("nr_rank needs at least one candidate")
    return _nr_scores(candidates, topic, history, cfg)[0].sentence


def _select_mmr(
    sentences: Sequence[Sentence],
    topic: Topic,
    cfg: RankingConfig,
) -> list[ScoredSentence]:
    # Iterative re-ranking: each round rescoring against what is selected,
    # then admitting the best candidate that fits.
    query_vector = TermVector.from_tokens(topic.query_tokens)
    remaining = list(sentences)
    admitted: list[ScoredSentence] = []
    total = 0
    while remaining:
        ranked = _mmr_scores(
            remaining, topic, [sc.sentence for sc in admitted], cfg, query_vector
        )
        chosen = None
        for candidate in ranked:
            words = candidate.sentence.word_count
            if total + words > cfg.word_budget:
                continue
            if any(
                lcs_norm(
                    candidate.sentence.tokens, kept.sentence.tokens, cfg.lcs_denominator
                )
                >= cfg.redundancy_threshold
                for kept in admitted
            ):
                continue
            chosen = candidate
            break
        if chosen is None:
            break
        admitted.append(chosen)
        total += chosen.sentence.word_count
        remaining.remove(chosen.sentence)
    return admitted


def select_for_summary(
    sentences: Sequence[Sentence],
    topic: Topic,
    history: History,
    cfg: RankingConfig,
    scorer: str = "smmr",
) -> list[ScoredSentence]:
    """Rank with the chosen scorer and admit sentences under the budget."""
    if scorer == "smmr":
        return select_sentences(rank_cluster(sentences, topic, history, cfg), cfg)
    if scorer == "nr":
        return select_sentences(_nr_scores(sentences, topic, history, cfg), cfg)
    if scorer == "mmr":
        return _select_mmr(sentences, topic, cfg)
    raise ValueError(f"scorer must be one of {SCORERS}, got {scorer!r}")
