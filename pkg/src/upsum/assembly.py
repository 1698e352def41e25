"""Rule-based post-processing and summary assembly.

Selected sentences are ordered by document date, acronyms are expanded on
first occurrence, dates and numbers are standardized, fuzzy temporal
references are resolved against the source document date, leading discursive
markers are dropped, and say clauses plus parenthesized content are removed.
Because the rewrites change sentence lengths, assembly iterates and drops
the lowest-scored sentence until the summary fits the word budget.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from datetime import date
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import Cluster
from .errors import EmptySummaryError
from .preprocess import MONTHS, Sentence, _resource_path
from .ranking import ScoredSentence

__all__ = [
    "AcronymTable",
    "Summary",
    "SummarySentence",
    "TemporalRule",
    "assemble",
    "default_markers",
    "default_temporal_rules",
    "load_markers",
    "load_temporal_rules",
    "mine_acronyms",
    "order_sentences",
    "rewrite_acronyms",
    "rewrite_dates_numbers",
    "rewrite_temporal_refs",
    "strip_discursive",
    "strip_say_clauses_and_parens",
]

_EPOCH = date.min

_MONTH_ALT = "|".join(MONTHS)
_FULL_DATE = re.compile(
    rf"\b({_MONTH_ALT})\s+(\d{{1,2}})(?:\s*,\s*|\s+)(\d{{4}})\b", re.IGNORECASE
)
_MONTH_YEAR = re.compile(rf"\b({_MONTH_ALT})\s+(\d{{4}})\b", re.IGNORECASE)
_MONTH_DAY = re.compile(rf"\b({_MONTH_ALT})\s+(\d{{1,2}})\b(?!\s*,?\s*\d)", re.IGNORECASE)
_BIG_NUMBER = re.compile(r"(?<![\d,./-])(\d{5,})(?![\d,./-])")

_PAREN_SPAN = re.compile(r"\s*\(([^()]*)\)")
_ACRO_CONTENT = re.compile(r"^[A-Z]{2,10}$")
_SAY_CLAUSE = re.compile(
    r",\s+(?:he|she|it|they|we|i|you|[A-Z][\w.'-]*(?:\s+[A-Z][\w.'-]*){0,3})"
    r"\s+(?:said|says)(?=\s*[.!?]|\s*$)"
)
_DOTTED_ACRONYM = re.compile(r"\b(?:[A-Z]\.){2,}")
_ACRONYM_TOKEN = re.compile(r"\b[A-Z]{2,10}\b")

_EXPANSION_THEN_ACRO = re.compile(r"((?:[A-Z][\w'&-]*\s+)+)\(\s*([A-Z]{2,10})\s*\)")
_ACRO_THEN_EXPANSION = re.compile(r"\b([A-Z]{2,10})\s+\(([^()]+)\)")


@dataclass(frozen=True, slots=True)
class TemporalRule:
    """Fuzzy phrase resolved by date arithmetic on the document date."""

    phrase: str
    unit: str  # "year" or "month"
    offset: int


@dataclass(frozen=True, slots=True)
class SummarySentence:
    text: str
    doc_id: str
    timestamp: date | None


@dataclass(frozen=True, slots=True)
class Summary:
    topic_id: str
    set_label: str
    sentences: tuple[SummarySentence, ...]
    final_text: str
    word_count: int


class AcronymTable:
    """Mined acronym expansions with corpus-wide frequencies.

    ``best`` returns the most frequent expansion (ties broken
    alphabetically); unknown acronyms return None.
    """

    __slots__ = ("entries",)

    def __init__(self, counts: dict[tuple[str, str], int] | None = None):
        table: dict[str, list[tuple[str, int]]] = {}
        for (acro, expansion), freq in (counts or {}).items():
            table.setdefault(acro, []).append((expansion, freq))
        self.entries = {
            acro: tuple(sorted(options, key=lambda e: (-e[1], e[0])))
            for acro, options in table.items()
        }

    def best(self, acronym: str) -> str | None:
        options = self.entries.get(acronym)
        return options[0][0] if options else None

    def __contains__(self, acronym: str) -> bool:
        return acronym in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def load_temporal_rules(path: str | Path) -> tuple[TemporalRule, ...]:
    """Read a ``phrase<TAB>unit<TAB>offset`` rule file."""
    rules = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        phrase, unit, offset = line.split("\t")
        unit = unit.strip().lower()
        if unit not in ("year", "month"):
            raise ValueError(f"temporal rule unit must be year or month, got {unit!r}")
        rules.append(TemporalRule(phrase.strip().lower(), unit, int(offset.strip())))
    # Longest phrases first so "earlier this year" wins over "this year".
    rules.sort(key=lambda r: (-len(r.phrase), r.phrase))
    return tuple(rules)


def load_markers(path: str | Path) -> tuple[str, ...]:
    """Read the discursive-marker list (one phrase per line)."""
    markers = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip().lower()
        if line and not line.startswith("#"):
            markers.append(line)
    markers.sort(key=lambda m: (-len(m), m))
    return tuple(markers)


@lru_cache(maxsize=None)
def default_temporal_rules() -> tuple[TemporalRule, ...]:
    return load_temporal_rules(_resource_path("temporal_rules.tsv"))


@lru_cache(maxsize=None)
def default_markers() -> tuple[str, ...]:
    return load_markers(_resource_path("discursive_markers.txt"))


def _initials_match(words: Sequence[str], acronym: str) -> bool:
    if len(words) != len(acronym):
        return False
    return all(w[0].upper() == ch.upper() for w, ch in zip(words, acronym))


def mine_acronyms(clusters: Iterable[Cluster]) -> AcronymTable:
    """Harvest acronym definitions by pattern matching over raw text.

    Both ``Expansion Words (ACRO)`` and ``ACRO (Expansion Words)`` are
    accepted when the expansion initials spell the acronym; occurrences are
    counted corpus-wide.
    """
    counts: dict[tuple[str, str], int] = {}

    def scan(text: str) -> None:
        for match in _EXPANSION_THEN_ACRO.finditer(text):
            acro = match.group(2)
            words = match.group(1).split()
            if len(words) < len(acro):
                continue
            tail = words[-len(acro) :]
            if _initials_match(tail, acro):
                key = (acro, " ".join(tail))
                counts[key] = counts.get(key, 0) + 1
        for match in _ACRO_THEN_EXPANSION.finditer(text):
            acro = match.group(1)
            words = match.group(2).split()
            if _initials_match(words, acro):
                key = (acro, " ".join(words))
                counts[key] = counts.get(key, 0) + 1

    for cluster in clusters:
        for doc in cluster.documents:
            if doc.headline:
                scan(doc.headline)
            scan(doc.body)
    return AcronymTable(counts)


def rewrite_acronyms(texts: Sequence[str], table: AcronymTable) -> list[str]:
    """Expand the first occurrence of each known acronym, leave the rest.

    An acronym already followed or preceded by a parenthesis is treated as
    expanded in place and consumes the first occurrence.
    """
    seen: set[str] = set()
    out = []
    for text in texts:
        def replace(match: re.Match) -> str:
            acro = match.group(0)
            expansion = table.best(acro)
            if expansion is None or acro in seen:
                return acro
            seen.add(acro)
            start, end = match.start(), match.end()
            before = text[start - 1] if start > 0 else ""
            after = text[end : end + 2].lstrip()
            if before == "(" or after.startswith("("):
                return acro
            return f"{expansion} ({acro})"

        out.append(_ACRONYM_TOKEN.sub(replace, text))
    return out


def rewrite_dates_numbers(text: str) -> str:
    """Standardize spelled-out dates (MM/DD/YYYY, MM/YYYY, MM/DD) and group
    digits of large numbers with commas."""

    def full_date(match: re.Match) -> str:
        month = MONTHS[match.group(1).lower()]
        day = int(match.group(2))
        if not 1 <= day <= 31:
            return match.group(0)
        return f"{month:02d}/{day:02d}/{match.group(3)}"

    def month_year(match: re.Match) -> str:
        month = MONTHS[match.group(1).lower()]
        return f"{month:02d}/{match.group(2)}"

    def month_day(match: re.Match) -> str:
        month = MONTHS[match.group(1).lower()]
        day = int(match.group(2))
        if not 1 <= day <= 31:
            return match.group(0)
        return f"{month:02d}/{day:02d}"

    out = _FULL_DATE.sub(full_date, text)
    out = _MONTH_YEAR.sub(month_year, out)
    out = _MONTH_DAY.sub(month_day, out)
    out = _BIG_NUMBER.sub(lambda m: f"{int(m.group(1)):,}", out)
    return out


def _shift_months(d: date, offset: int) -> tuple[int, int]:
    total = d.year * 12 + d.month - 1 + offset
    return total // 12, total % 12 + 1


def rewrite_temporal_refs(
    text: str,
    doc_timestamp: date | None,
    rules: Sequence[TemporalRule] | None = None,
) -> str:
    """Resolve fuzzy temporal phrases against the document date.

    Year-unit rules resolve to a bare year, month-unit rules to MM/YYYY.
    A phrase opening the sentence becomes "In <resolved>". Without a
    document date the text is returned unchanged.
    """
    if doc_timestamp is None:
        return text
    rules = rules if rules is not None else default_temporal_rules()
    for rule in rules:
        pattern = re.compile(rf"\b{re.escape(rule.phrase)}\b", re.IGNORECASE)

        def resolve(match: re.Match) -> str:
            if rule.unit == "year":
                resolved = str(doc_timestamp.year + rule.offset)
            else:
                year, month = _shift_months(doc_timestamp, rule.offset)
                resolved = f"{month:02d}/{year}"
            return f"In {resolved}" if match.start() == 0 else resolved

        text = pattern.sub(resolve, text)
    return text


def strip_discursive(text: str, markers: Sequence[str] | None = None) -> str:
    """Drop a sentence-initial discursive marker and recapitalize."""
    markers = markers if markers is not None else default_markers()
    for marker in markers:
        match = re.match(rf"{re.escape(marker)}\b(\s*,\s*|\s+)", text, re.IGNORECASE)
        if match:
            rest = text[match.end() :]
            for i, ch in enumerate(rest):
                if ch.isalpha():
                    rest = rest[:i] + ch.upper() + rest[i + 1 :]
                    break
            return rest
    return text


def _collapse_dotted_acronyms(text: str) -> str:
    end = len(text.rstrip())

    def collapse(match: re.Match) -> str:
        letters = match.group(0).replace(".", "")
        # Keep the final period when the abbreviation closes the sentence.
        return letters + "." if match.end() >= end else letters

    return _DOTTED_ACRONYM.sub(collapse, text)


def strip_say_clauses_and_parens(text: str) -> str:
    """Remove trailing say clauses and parenthesized spans, clean punctuation.

    Parenthesized acronym markers like "(WHO)" survive (they are produced by
    acronym expansion); unbalanced parentheses are left untouched.
    """
    while True:
        replaced = _PAREN_SPAN.sub(
            lambda m: m.group(0) if _ACRO_CONTENT.match(m.group(1)) else "", text
        )
        if replaced == text:
            break
        text = replaced
    text = _SAY_CLAUSE.sub("", text)
    text = _collapse_dotted_acronyms(text)
    text = re.sub(r"\s+", " ", text)
    text = re.sub(r"\s+([.,!?;:])", r"\1", text)
    text = re.sub(r",\s*,", ",", text)
    text = re.sub(r",\s*([.!?])", r"\1", text)
    return text.strip()


def order_sentences(selected: Sequence[Sentence]) -> list[Sentence]:
    """Stable order by document date, document position, sentence index."""
    return sorted(selected, key=lambda s: (s.timestamp or _EPOCH, s.doc_pos, s.index))


def _rewrite(
    sentence: Sentence,
    text: str,
    rules: Sequence[TemporalRule] | None,
    markers: Sequence[str] | None,
) -> str:
    text = rewrite_dates_numbers(text)
    text = rewrite_temporal_refs(text, sentence.timestamp, rules)
    text = strip_discursive(text, markers)
    text = strip_say_clauses_and_parens(text)
    return text


def assemble(
    selected: Sequence[ScoredSentence],
    budget: int,
    table: AcronymTable | None = None,
    *,
    temporal_rules: Sequence[TemporalRule] | None = None,
    markers: Sequence[str] | None = None,
    topic_id: str = "",
    set_label: str = "A",
) -> Summary:
    """Order, rewrite and fit the selected sentences under the word budget.

    Rewrites (acronym expansion in particular) change word counts, so the
    pass repeats from the raw sentences after dropping the lowest-scored
    one whenever the rewritten summary exceeds the budget. Dropping every
    sentence raises EmptySummaryError.
    """
    if not selected:
        raise EmptySummaryError(f"{topic_id}.{set_label}: nothing selected")
    working = list(selected)
    while working:
        ordered = order_sentences([sc.sentence for sc in working])
        texts = [s.raw for s in ordered]
        if table is not None and len(table):
            texts = rewrite_acronyms(texts, table)
        rewritten = [
            _rewrite(sentence, text, temporal_rules, markers)
            for sentence, text in zip(ordered, texts)
        ]
        total = sum(len(t.split()) for t in rewritten)
        if total <= budget:
            final_text = " ".join(rewritten)
            return Summary(
                topic_id=topic_id,
                set_label=set_label,
                sentences=tuple(
                    SummarySentence(text, s.doc_id, s.timestamp)
                    for s, text in zip(ordered, rewritten)
                ),
                final_text=final_text,
                word_count=len(final_text.split()),
            )
        lowest = min(sc.score for sc in working)
        victims = [sc for sc in working if sc.score == lowest]
        victims.sort(
            key=lambda sc: (sc.sentence.timestamp or _EPOCH, sc.sentence.doc_pos, sc.sentence.index)
        )
        working.remove(victims[-1])
    raise EmptySummaryError(f"{topic_id}.{set_label}: no sentence fits the budget")
