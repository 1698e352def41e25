"""Query-oriented multi-document update summarizer.

Pipeline: load topic and document clusters, normalize sentences, score each
candidate by query relevance times a history non-redundancy penalty, select
greedily under a 100-word budget, then apply rule-based rewrites. Includes
recall-oriented n-gram evaluation and a batch CLI with noise-injection and
novelty-factor sweep experiments.
"""

from .assembly import AcronymTable, Summary, assemble, mine_acronyms, order_sentences
from .corpus import (
    Cluster,
    Document,
    History,
    Topic,
    build_history,
    load_cluster,
    load_topic,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .preprocess import (
    Lexicon,
    Sentence,
    Stoplist,
    preprocess_cluster,
    preprocess_document,
    preprocess_topic,
    split_sentences,
)
from .ranking import (
    RankingConfig,
    ScoredSentence,
    novelty_factor,
    rank_cluster,
    select_for_summary,
    select_sentences,
    smmr_score,
)
from .rouge import RougeReport, evaluate_run, rouge_n, rouge_su4
from .similarity import TermVector, cosine, jaro, jaro_winkler, jw_extended, lcs_norm, sim1

__version__ = "0.1.0"

__all__ = [
    "AcronymTable",
    "Cluster",
    "Document",
    "History",
    "KERNEL_BACKEND",
    "Lexicon",
    "RankingConfig",
    "RougeReport",
    "ScoredSentence",
    "Sentence",
    "Stoplist",
    "Summary",
    "TermVector",
    "Topic",
    "assemble",
    "build_history",
    "cosine",
    "evaluate_run",
    "jaro",
    "jaro_winkler",
    "jw_extended",
    "lcs_norm",
    "load_cluster",
    "load_topic",
    "mine_acronyms",
    "novelty_factor",
    "order_sentences",
    "preprocess_cluster",
    "preprocess_document",
    "preprocess_topic",
    "rank_cluster",
    "rouge_n",
    "rouge_su4",
    "select_for_summary",
    "select_sentences",
    "sim1",
    "smmr_score",
    "split_sentences",
]
