"""Document normalization ahead of scoring.

Raw bodies are stripped of news-agency datelines, split into sentences with
person-name guards, then each sentence is lowercased, cleared of punctuation
and stopwords, date expressions are collapsed and enriched, and remaining
words are replaced by their roots from a word-root database.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass, replace
from datetime import date
from functools import lru_cache
from importlib import resources as _resources
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import Cluster, Document, Topic

__all__ = [
    "Lexicon",
    "Sentence",
    "Stoplist",
    "default_lexicon",
    "default_stoplist",
    "filter_tokens",
    "guard_person_names",
    "normalize_dates",
    "normalize_words",
    "preprocess_cluster",
    "preprocess_document",
    "preprocess_text",
    "preprocess_topic",
    "split_sentences",
    "strip_dateline",
]

# Placeholder for a period marked non-breaking by the name guards.
GUARD_DOT = ""

_SENTENCE_DELIMS = ".!?"

# Consecutive single-letter abbreviations: "U.S.", "U.N.", ...
_ACRONYM_RUN = re.compile(r"\b(?:[A-Z]\.){2,}")
# Middle initial between two capitalized words: "George W. Bush".
_MIDDLE_INITIAL = re.compile(r"\b([A-Z][\w'-]+\s+[A-Z])\.(?=\s+[A-Z][a-z])")
# Leading news-agency dateline: all-caps token(s) then "_" or "--".
_DATELINE = re.compile(
    r"^\s*[A-Z][A-Z.,'-]*(?:[ \t]+[A-Z][A-Z.,'-]*){0,4}[ \t]*(?:\([A-Z]+\)[ \t]*)?(?:_|--)[ \t]*"
)

_STRIP_CHARS = string.punctuation + "‘’“”–—…«»"

MONTHS = {
    "january": 1,
    "february": 2,
    "march": 3,
    "april": 4,
    "may": 5,
    "june": 6,
    "july": 7,
    "august": 8,
    "september": 9,
    "october": 10,
    "november": 11,
    "december": 12,
}
MONTH_NAMES = {num: name for name, num in MONTHS.items()}

_DAY = re.compile(r"^\d{1,2}$")
_YEAR = re.compile(r"^\d{4}$")
_NUMERIC_DATE = re.compile(r"^(\d{1,2})/(\d{1,2})/(\d{4})$")


@dataclass(frozen=True, slots=True)
class Sentence:
    """Dual sentence representation: raw surface text plus processed tokens.

    ``word_count`` counts whitespace-delimited words of the raw form (the
    summary budget is measured on surface text). ``timestamp`` and
    ``doc_pos`` carry the source document's date and position within its
    cluster for ordering and temporal rewriting.
    """

    doc_id: str
    index: int
    raw: str
    tokens: tuple[str, ...]
    word_count: int
    timestamp: date | None = None
    doc_pos: int = 0


class Stoplist:
    """Case-insensitive stopword membership (entries stored lowercase)."""

    __slots__ = ("words",)

    def __init__(self, words: Iterable[str]):
        self.words = frozenset(w.strip().lower() for w in words if w.strip())

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.words

    def __len__(self) -> int:
        return len(self.words)

    @classmethod
    def from_file(cls, path: str | Path) -> "Stoplist":
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        return cls(line for line in lines if not line.lstrip().startswith("#"))


class Lexicon:
    """Word-root database: inflected form -> (root, corpus frequency).

    Ambiguous forms resolve to the most frequent root (ties to the
    lexicographically smallest); root chains are collapsed at load time so
    every stored root is a fixed point and lookups are idempotent. Unknown
    words map to themselves.
    """

    __slots__ = ("entries",)

    def __init__(self, rows: Iterable[tuple[str, str, int]]):
        candidates: dict[str, dict[str, int]] = {}
        for form, root, freq in rows:
            form, root = form.strip().lower(), root.strip().lower()
            if not form or not root:
                continue
            roots = candidates.setdefault(form, {})
            if freq > roots.get(root, -1):
                roots[root] = freq

        def winner(form: str) -> tuple[str, int]:
            roots = candidates[form]
            root = min(roots, key=lambda r: (-roots[r], r))
            return root, roots[root]

        resolved: dict[str, tuple[str, int]] = {}
        for form in candidates:
            root, freq = winner(form)
            seen = {form}
            while root in candidates and root not in seen:
                seen.add(root)
                nxt, _ = winner(root)
                if nxt == root:
                    break
                root = nxt
            resolved[form] = (root, freq)
        self.entries = resolved

    def lookup(self, word: str) -> str:
        entry = self.entries.get(word)
        return entry[0] if entry is not None else word

    def __len__(self) -> int:
        return len(self.entries)

    @classmethod
    def from_file(cls, path: str | Path) -> "Lexicon":
        rows = []
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                continue
            form, root, freq = parts
            try:
                rows.append((form, root, int(freq)))
            except ValueError:
                continue
        return cls(rows)


def _resource_path(name: str) -> Path:
    return Path(str(_resources.files("upsum").joinpath("resources", name)))


@lru_cache(maxsize=None)
def default_stoplist() -> Stoplist:
    return Stoplist.from_file(_resource_path("stoplist.txt"))


@lru_cache(maxsize=None)
def default_lexicon() -> Lexicon:
    return Lexicon.from_file(_resource_path("lexicon.tsv"))


def strip_dateline(body: str) -> str:
    """Drop a leading news-agency dateline ("WASHINGTON _ ...")."""
    return _DATELINE.sub("", body, count=1)


def guard_person_names(body: str) -> str:
    """Mark ambiguous abbreviation periods as non-breaking.

    Two guards: runs of single-letter abbreviations ("U.S.") and a single
    capital-letter initial between two capitalized words ("George W. Bush").
    Guarded periods become GUARD_DOT; split_sentences restores them.
    """
    out = _ACRONYM_RUN.sub(lambda m: m.group(0).replace(".", GUARD_DOT), body)
    out = _MIDDLE_INITIAL.sub(lambda m: m.group(1) + GUARD_DOT, out)
    return out


def split_sentences(body: str) -> list[str]:
    """Split text at ., ! and ? (runs attach to the preceding chunk).

    Person-name guards are applied first and restored in the output, so the
    concatenation of the chunks reproduces the input modulo whitespace.
    """
    if not body or not body.strip():
        return []
    guarded = guard_person_names(body)
    chunks: list[str] = []
    start = 0
    i = 0
    n = len(guarded)
    while i < n:
        if guarded[i] in _SENTENCE_DELIMS:
            while i + 1 < n and guarded[i + 1] in _SENTENCE_DELIMS:
                i += 1
            chunks.append(guarded[start : i + 1])
            start = i + 1
        i += 1
    if start < n:
        chunks.append(guarded[start:])
    out = []
    for chunk in chunks:
        restored = chunk.replace(GUARD_DOT, ".").strip()
        if restored:
            out.append(restored)
    return out


def filter_tokens(raw_sentence: str, stoplist: Stoplist | None = None) -> list[str]:
    """Lowercase, strip edge punctuation per token, drop stopwords.

    Tokens reduced to nothing by punctuation stripping are dropped; internal
    hyphens and apostrophes survive ("don't-stop").
    """
    stoplist = stoplist if stoplist is not None else default_stoplist()
    out = []
    for word in raw_sentence.lower().split():
        word = word.strip(_STRIP_CHARS)
        if not word or word in stoplist:
            continue
        out.append(word)
    return out


def normalize_dates(tokens: Sequence[str]) -> list[str]:
    """Collapse date expressions and enrich them with month/year tokens.

    month-name day year -> MM/DD/YYYY, month-name year -> MM_YYYY, and an
    already numeric MM/DD/YYYY is zero-padded; each is followed by
    ``_<month>_`` and ``_<year>_``. Anything else passes through.
    """
    out: list[str] = []
    i = 0
    n = len(tokens)
    while i < n:
        token = tokens[i]
        month = MONTHS.get(token)
        if month is not None:
            if (
                i + 2 < n
                and _DAY.match(tokens[i + 1])
                and 1 <= int(tokens[i + 1]) <= 31
                and _YEAR.match(tokens[i + 2])
            ):
                day, year = int(tokens[i + 1]), tokens[i + 2]
                out += [f"{month:02d}/{day:02d}/{year}", f"_{token}_", f"_{year}_"]
                i += 3
                continue
            if i + 1 < n and _YEAR.match(tokens[i + 1]):
                year = tokens[i + 1]
                out += [f"{month:02d}_{year}", f"_{token}_", f"_{year}_"]
                i += 2
                continue
        else:
            numeric = _NUMERIC_DATE.match(token)
            if numeric:
                mm, dd, year = int(numeric.group(1)), int(numeric.group(2)), numeric.group(3)
                if 1 <= mm <= 12 and 1 <= dd <= 31:
                    out += [f"{mm:02d}/{dd:02d}/{year}", f"_{MONTH_NAMES[mm]}_", f"_{year}_"]
                    i += 1
                    continue
        out.append(token)
        i += 1
    return out


def normalize_words(tokens: Sequence[str], lexicon: Lexicon | None = None) -> list[str]:
    """Replace each token by its lexicon root; unknown tokens unchanged."""
    lexicon = lexicon if lexicon is not None else default_lexicon()
    return [lexicon.lookup(t) for t in tokens]


def preprocess_text(
    text: str,
    stoplist: Stoplist | None = None,
    lexicon: Lexicon | None = None,
) -> list[str]:
    """Run filter -> dates -> words over one piece of raw text."""
    return normalize_words(normalize_dates(filter_tokens(text, stoplist)), lexicon)


def preprocess_document(
    doc: Document,
    stoplist: Stoplist | None = None,
    lexicon: Lexicon | None = None,
    doc_pos: int = 0,
) -> list[Sentence]:
    """Split a document and normalize every sentence.

    Sentences whose token list is empty after filtering are dropped; the
    sentence index is the ordinal in split order, so indices are stable
    regardless of drops.
    """
    body = strip_dateline(doc.body)
    sentences = []
    for index, raw in enumerate(split_sentences(body)):
        tokens = preprocess_text(raw, stoplist, lexicon)
        if not tokens:
            continue
        sentences.append(
            Sentence(
                doc_id=doc.id,
                index=index,
                raw=raw,
                tokens=tuple(tokens),
                word_count=len(raw.split()),
                timestamp=doc.timestamp,
                doc_pos=doc_pos,
            )
        )
    return sentences


def preprocess_cluster(
    cluster: Cluster,
    stoplist: Stoplist | None = None,
    lexicon: Lexicon | None = None,
) -> list[Sentence]:
    """Preprocess every document of a cluster, tagging document positions."""
    sentences = []
    for pos, doc in enumerate(cluster.documents):
        sentences.extend(preprocess_document(doc, stoplist, lexicon, doc_pos=pos))
    return sentences


def preprocess_topic(
    topic: Topic,
    stoplist: Stoplist | None = None,
    lexicon: Lexicon | None = None,
) -> Topic:
    """Fill ``query_tokens`` from the topic title and narrative."""
    text = f"{topic.title} {topic.narrative}".strip()
    return replace(topic, query_tokens=tuple(preprocess_text(text, stoplist, lexicon)))
