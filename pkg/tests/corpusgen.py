"""Deterministic synthetic corpora for tests and experiments.

Topics use invented vocabularies (unknown to the lexicon, absent from the
stoplist) so scoring behavior is fully controlled:

- a *disjoint* corpus gives every topic its own vocabulary, so foreign
  documents share zero query terms with any other topic;
- an *overlap* corpus additionally plants one shared query word in every
  topic, so injected noise interacts mildly with the query;
- a *runtime* corpus scales to many topics/documents for timing runs.

All sentences of the noise corpora are exactly 25 raw words, so a 100-word
budget admits exactly four and no injected sentence can ever squeeze in.
"""

from __future__ import annotations

import random
from pathlib import Path

_SYLLABLES = (
    "ar be ce do el fi go hu is ja ko lu me no pa qui ro su ta ur va wo xe yo zu".split()
)

_FILLERS = ("the", "of", "and", "in", "to", "with", "for", "on", "from", "by")


def topic_prefix(index: int) -> str:
    a = _SYLLABLES[index % len(_SYLLABLES)]
    b = _SYLLABLES[(index * 7 + 3) % len(_SYLLABLES)]
    c = _SYLLABLES[(index * 13 + 5) % len(_SYLLABLES)]
    return a + b + c


def topic_words(index: int, count: int) -> list[str]:
    prefix = topic_prefix(index)
    return [f"{prefix}{k:02d}" for k in range(count)]


def _sentence(rng: random.Random, words: list[str], query: list[str], n_query: int, length: int) -> str:
    tokens = rng.sample(query, min(n_query, len(query)))
    while len(tokens) < length:
        tokens.append(rng.choice(words))
    rng.shuffle(tokens)
    tokens[0] = tokens[0].capitalize()
    return " ".join(tokens) + "."


def _write_topic_file(root: Path, topic_id: str, query: list[str]) -> None:
    path = root / "topics" / f"{topic_id}.txt"
    path.parent.mkdir(parents=True, exist_ok=True)
    title = " ".join(query[:3])
    narrative = "Describe the " + " ".join(query) + " events."
    path.write_text(f"id: {topic_id}\ntitle: {title}\nnarrative: {narrative}\n", encoding="utf-8")


def _write_doc(root: Path, topic_id: str, set_label: str, doc_idx: int, date: str, sentences: list[str]) -> None:
    path = root / "clusters" / topic_id / set_label / f"d{doc_idx:02d}.txt"
    path.parent.mkdir(parents=True, exist_ok=True)
    doc_id = f"{topic_id}{set_label}{doc_idx:02d}"
    path.write_text(f"{doc_id}\t{date}\n" + " ".join(sentences) + "\n", encoding="utf-8")


def _write_refs(root: Path, topic_id: str, set_label: str, texts: list[str]) -> None:
    for annotator, text in enumerate(texts, 1):
        path = root / "refs" / f"{topic_id}.{set_label}.{annotator}.txt"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n", encoding="utf-8")


def make_noise_corpus(
    root: Path,
    n_topics: int = 6,
    docs_per_set: int = 5,
    sentences_per_doc: int = 4,
    shared_query_word: str | None = None,
    seed: int = 11,
) -> Path:
    """Fixed-width corpus for the noise-injection experiment.

    With ``shared_query_word`` set, that word joins every topic's query and
    vocabulary (partial overlap); otherwise vocabularies are fully disjoint.
    """
    root = Path(root)
    for t in range(n_topics):
        words = topic_words(t, 40)
        query = words[:6]
        if shared_query_word:
            query = [shared_query_word] + query[1:]
            words = [shared_query_word] + words
        rng = random.Random(seed * 10_687 + t)
        _write_topic_file(root, f"T{t:02d}", query)
        ref_pool: dict[str, list[str]] = {"A": [], "B": []}
        for set_label, month in (("A", 1), ("B", 2)):
            for d in range(docs_per_set):
                sentences = [
                    _sentence(rng, words, query, n_query=2 + (d + j) % 3, length=25)
                    for j in range(sentences_per_doc)
                ]
                _write_doc(root, f"T{t:02d}", set_label, d, f"2020-{month:02d}-{d + 1:02d}", sentences)
                ref_pool[set_label].extend(sentences[:1])
        for set_label in ("A", "B"):
            picks = ref_pool[set_label]
            _write_refs(root, f"T{t:02d}", set_label, [" ".join(picks[:2]), " ".join(picks[2:4])])
    return root


def make_runtime_corpus(
    root: Path,
    n_topics: int = 48,
    docs_per_set: int = 10,
    sentences_per_doc: int = 30,
    seed: int = 7,
) -> Path:
    """Large corpus for end-to-end timing (plain-text documents)."""
    root = Path(root)
    shared = [f"common{k:02d}" for k in range(40)]
    for t in range(n_topics):
        words = topic_words(t, 60) + shared
        query = topic_words(t, 60)[:8]
        rng = random.Random(seed * 24_097 + t)
        _write_topic_file(root, f"R{t:02d}", query)
        for set_label, month in (("A", 1), ("B", 2)):
            for d in range(docs_per_set):
                sentences = []
                for j in range(sentences_per_doc):
                    length = 12 + (j % 7)
                    body = [rng.choice(query) for _ in range(1 + j % 3)]
                    while len(body) < length:
                        pick = rng.random()
                        if pick < 0.25:
                            body.append(rng.choice(_FILLERS))
                        else:
                            body.append(rng.choice(words))
                    rng.shuffle(body)
                    body[0] = body[0].capitalize()
                    sentences.append(" ".join(body) + ".")
                _write_doc(root, f"R{t:02d}", set_label, d, f"2021-{month:02d}-{d + 1:02d}", sentences)
    return root
