"""Domain model and disk loading: topics, document clusters, history.

Two document formats are supported: a minimal XML subset
(``<DOC id="...">`` with optional ``<HEADLINE>``/``<DATELINE>`` and a
``<TEXT>`` element containing ``<P>`` paragraphs) and a plain-text fallback
whose first line is ``id<TAB>YYYY-MM-DD`` followed by the body. Document
dates come from the DATELINE when present, otherwise from an 8-digit date
embedded in the document id (e.g. NYT19990412.0403); documents with neither
are rejected with a warning.
"""

from __future__ import annotations

import logging
import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field, replace
from datetime import date, datetime
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

from .errors import MalformedTopicError, NoDocumentsError

if TYPE_CHECKING:
    from .preprocess import Sentence

log = logging.getLogger(__name__)

SET_LABELS = ("A", "B")

_ID_DATE = re.compile(r"(\d{8})")


@dataclass(frozen=True, slots=True)
class Document:
    """One timestamped news article inside a cluster."""

    id: str
    timestamp: date
    headline: str | None
    body: str
    cluster_id: str


@dataclass(frozen=True, slots=True)
class DocumentRejected:
    """Record of a file skipped while loading a cluster."""

    path: str
    reason: str


@dataclass(frozen=True, slots=True)
class Cluster:
    """A chronologically sorted document set (A or B) for one topic."""

    id: str
    set_label: str
    documents: tuple[Document, ...]
    warnings: tuple[DocumentRejected, ...] = ()

    def __post_init__(self) -> None:
        if self.set_label not in SET_LABELS:
            raise ValueError(f"set_label must be one of {SET_LABELS}, got {self.set_label!r}")


@dataclass(frozen=True, slots=True)
class Topic:
    """Query statement: id, title and narrative, plus processed query tokens."""

    id: str
    title: str
    narrative: str
    query_tokens: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class History:
    """Processed sentences the reader is assumed to have already seen.

    ``source_cluster_count`` counts the current cluster plus all preceding
    ones: 1 when summarizing set A (empty history), 2 for set B.
    """

    sentences: tuple["Sentence", ...] = ()
    source_cluster_count: int = 1

    def __post_init__(self) -> None:
        if self.source_cluster_count < 1:
            raise ValueError("source_cluster_count must be >= 1")


def _parse_timestamp(raw: str) -> date:
    return date.fromisoformat(raw.strip())


def _timestamp_from_id(doc_id: str) -> date | None:
    for match in _ID_DATE.finditer(doc_id):
        try:
            return datetime.strptime(match.group(1), "%Y%m%d").date()
        except ValueError:
            continue
    return None


def _parse_xml_document(text: str, cluster_id: str) -> Document:
    root = ET.fromstring(text)
    if root.tag.upper() != "DOC":
        raise ValueError(f"expected a DOC root element, got <{root.tag}>")
    doc_id = (root.get("id") or "").strip()
    if not doc_id:
        raise ValueError("DOC element has no id attribute")

    headline = None
    timestamp = None
    for child in root:
        tag = child.tag.upper()
        if tag == "HEADLINE" and child.text:
            headline = child.text.strip() or None
        elif tag == "DATELINE" and child.text:
            timestamp = _parse_timestamp(child.text)

    text_el = next((c for c in root if c.tag.upper() == "TEXT"), None)
    if text_el is None:
        raise ValueError("DOC element has no TEXT element")
    paragraphs = [p.text.strip() for p in text_el if p.tag.upper() == "P" and p.text]
    body = "\n\n".join(paragraphs) if paragraphs else (text_el.text or "").strip()
    if not body:
        raise ValueError("document body is empty")

    if timestamp is None:
        timestamp = _timestamp_from_id(doc_id)
    if timestamp is None:
        raise ValueError(f"no DATELINE and no parseable date in id {doc_id!r}")
    return Document(doc_id, timestamp, headline, body, cluster_id)


def _parse_text_document(text: str, cluster_id: str) -> Document:
    first, _, body = text.partition("\n")
    doc_id, _, stamp = first.partition("\t")
    doc_id = doc_id.strip()
    if not doc_id:
        raise ValueError("header line has no document id")
    if stamp.strip():
        timestamp = _parse_timestamp(stamp)
    else:
        timestamp = _timestamp_from_id(doc_id)
        if timestamp is None:
            raise ValueError(f"no date in header and none embedded in id {doc_id!r}")
    body = body.strip()
    if not body:
        raise ValueError("document body is empty")
    return Document(doc_id, timestamp, None, body, cluster_id)


def parse_document_file(path: str | Path, cluster_id: str) -> Document:
    """Parse one document file, sniffing XML vs plain text."""
    text = Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("<"):
        return _parse_xml_document(text, cluster_id)
    return _parse_text_document(text, cluster_id)


def load_cluster(path: str | Path, set_label: str, cluster_id: str | None = None) -> Cluster:
    """Load every document file under ``path`` into a sorted Cluster.

    Malformed files are skipped and recorded in ``Cluster.warnings``; an
    empty or fully rejected directory raises NoDocumentsError.
    """
    directory = Path(path)
    cid = cluster_id or directory.name
    documents: list[Document] = []
    warnings: list[DocumentRejected] = []
    seen_ids: set[str] = set()
    for file in sorted(p for p in directory.iterdir() if p.is_file()):
        try:
            doc = parse_document_file(file, cid)
        except Exception as exc:  # noqa: BLE001 - any parse failure skips the file
            warnings.append(DocumentRejected(str(file), str(exc)))
            log.warning("skipping %s: %s", file, exc)
            continue
        if doc.id in seen_ids:
            warnings.append(DocumentRejected(str(file), f"duplicate document id {doc.id!r}"))
            continue
        seen_ids.add(doc.id)
        documents.append(doc)
    if not documents:
        raise NoDocumentsError(f"no loadable documents in {directory}")
    documents.sort(key=lambda d: (d.timestamp, d.id))
    return Cluster(cid, set_label, tuple(documents), tuple(warnings))


def load_topic(path: str | Path) -> Topic:
    """Parse a topic file: ``id:``, ``title:`` and ``narrative:`` lines.

    The narrative runs from its key to the end of the file. A missing id or
    narrative raises MalformedTopicError.
    """
    text = Path(path).read_text(encoding="utf-8")
    topic_id = ""
    title = ""
    narrative_parts: list[str] = []
    in_narrative = False
    for line in text.splitlines():
        if in_narrative:
            narrative_parts.append(line)
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if sep and key == "id":
            topic_id = value.strip()
        elif sep and key == "title":
            title = value.strip()
        elif sep and key == "narrative":
            narrative_parts.append(value)
            in_narrative = True
    narrative = "\n".join(narrative_parts).strip()
    if not topic_id or not narrative:
        raise MalformedTopicError(f"{path}: topic needs both an id and a narrative")
    return Topic(topic_id, title, narrative)


def build_history(
    prior_clusters: Sequence[Cluster],
    preprocessed: Mapping[str, Sequence["Sentence"]],
) -> History:
    """Union of the processed sentences of all prior clusters.

    Sentences are deduplicated by (doc_id, index) and ordered by that key,
    so the result does not depend on the order of ``prior_clusters``.
    ``source_cluster_count`` is len(prior_clusters) + 1 (the cluster about
    to be summarized counts too).
    """
    unique: dict[tuple[str, int], "Sentence"] = {}
    for cluster in prior_clusters:
        for sentence in preprocessed.get(cluster.id, ()):
            unique.setdefault((sentence.doc_id, sentence.index), sentence)
    ordered = tuple(unique[key] for key in sorted(unique))
    return History(ordered, len(prior_clusters) + 1)
