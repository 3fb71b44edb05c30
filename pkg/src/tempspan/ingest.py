"""Corpus ingestion: read documents from disk and split them into sentences.

Documents come from jsonl files (one object per line with ``id``, optional
``title``, ``text``) or plain-text files (blank-line-separated documents).
Text is normalized once at ingestion (NFC, CRLF -> LF, NULs stripped) so
that every downstream character offset is stable.  All offsets are counts
of Unicode scalar values, which is what Python string indexing gives us.

The sentence splitter is deliberately rule-based and dependency-free: a
sentence ends at ``.``, ``!`` or ``?`` followed by whitespace and an
uppercase letter, digit or quote, unless the dot closes a known
abbreviation (titles, latin tags, month abbreviations, initials).  Month
abbreviations matter here: "Jan. 1" must not become a boundary, since the
temporal tagger downstream wants the date in one piece.
"""

from __future__ import annotations

import json
import logging
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .errors import IngestError

log = logging.getLogger(__name__)

# Sentences longer than this (in scalars) are still emitted but are
# skipped by the mask generator; see masking.sentence_skip_reason.
MAX_MASKABLE_SENTENCE = 2048

SENTENCE_TERMINATORS = ".!?"
_CLOSERS = "\"'’”)]"          # may trail the terminator inside the sentence
_OPENING_QUOTES = "\"'‘“"     # may open the next sentence

# Dot-final tokens that do not end a sentence.  The month abbreviations and
# a.m./p.m. protect temporal expressions from being cut in half.
ABBREVIATIONS = frozenset({
    "Mr.", "Mrs.", "Ms.", "Dr.", "Prof.", "St.", "Sr.", "Jr.", "Rev.",
    "Gen.", "Hon.", "Capt.", "Lt.", "Col.", "Sgt.",
    "U.S.", "U.K.", "U.N.", "No.", "Nos.", "Vol.", "Inc.", "Ltd.", "Co.",
    "Corp.", "Mt.", "Ft.", "Ave.", "Blvd.",
    "Jan.", "Feb.", "Mar.", "Apr.", "Jun.", "Jul.", "Aug.", "Sep.",
    "Sept.", "Oct.", "Nov.", "Dec.",
    "etc.", "vs.", "e.g.", "i.e.", "cf.", "al.", "approx.", "est.",
    "a.m.", "p.m.",
})


@dataclass(frozen=True)
class Document:
    """One corpus record, normalized and ready to segment."""

    doc_id: str
    title: str
    text: str


@dataclass(frozen=True)
class Sentence:
    """A segmented unit; (start, end) index into the parent document text."""

    sent_id: str
    doc_id: str
    ordinal: int
    text: str
    start: int
    end: int

    @property
    def overlength(self) -> bool:
        return len(self.text) > MAX_MASKABLE_SENTENCE

    def to_record(self) -> dict:
        return {
            "sent_id": self.sent_id,
            "doc_id": self.doc_id,
            "ordinal": self.ordinal,
            "text": self.text,
            "start": self.start,
            "end": self.end,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "Sentence":
        return cls(
            sent_id=rec["sent_id"],
            doc_id=rec["doc_id"],
            ordinal=rec["ordinal"],
            text=rec["text"],
            start=rec["start"],
            end=rec["end"],
        )


def normalize_text(text: str) -> str:
    """NFC-normalize, unify line endings and drop NUL characters."""
    text = unicodedata.normalize("NFC", text)
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    return text.replace("\x00", "")


class IngestCounters:
    """Mutable skip counters for one ingestion run."""

    def __init__(self) -> None:
        self.documents = 0
        self.skipped_records = 0

    def as_dict(self) -> dict:
        return {"documents": self.documents, "skipped_records": self.skipped_records}


def read_documents(
    path: str | Path,
    format: str = "jsonl",
    strict: bool = False,
    counters: IngestCounters | None = None,
) -> Iterator[Document]:
    """Stream documents from ``path``.

    jsonl records need ``id`` and ``text`` (strings); ``title`` is optional.
    Malformed records are skipped and counted in lenient mode, fatal in
    strict mode.  Duplicate ids count as malformed (ids must be unique
    within one run).  Memory use is bounded by one record.
    """
    path = Path(path)
    if format not in ("jsonl", "plain"):
        raise IngestError(f"unknown corpus format {format!r} (expected jsonl or plain)")
    if not path.is_file():
        raise IngestError(f"cannot read corpus file: {path}")
    counters = counters if counters is not None else IngestCounters()

    if format == "jsonl":
        yield from _read_jsonl(path, strict, counters)
    else:
        yield from _read_plain(path, counters)


def _read_jsonl(path: Path, strict: bool, counters: IngestCounters) -> Iterator[Document]:
    seen: set[str] = set()
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            problem = None
            doc = None
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                problem = f"invalid JSON ({exc.msg})"
            else:
                problem, doc = _record_to_document(rec, seen)
            if problem is not None:
                if strict:
                    raise IngestError(f"{path}:{lineno}: {problem}")
                counters.skipped_records += 1
                log.warning("%s:%d: skipping record: %s", path, lineno, problem)
                continue
            assert doc is not None
            seen.add(doc.doc_id)
            counters.documents += 1
            yield doc


def _record_to_document(rec: object, seen: set[str]) -> tuple[str | None, Document | None]:
    if not isinstance(rec, dict):
        return "record is not a JSON object", None
    doc_id = rec.get("id")
    text = rec.get("text")
    title = rec.get("title", "")
    if not isinstance(doc_id, str) or not doc_id:
        return "missing or empty 'id' field", None
    if not isinstance(text, str):
        return "missing 'text' field", None
    if not isinstance(title, str):
        return "'title' field is not a string", None
    if doc_id in seen:
        return f"duplicate doc id {doc_id!r}", None
    return None, Document(doc_id=doc_id, title=title, text=normalize_text(text))


def _read_plain(path: Path, counters: IngestCounters) -> Iterator[Document]:
    """Blank-line-separated documents; doc_id is ``<filename>:<ordinal>``."""
    name = path.name
    ordinal = 0
    block: list[str] = []
    with path.open("r", encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                block.append(line.rstrip("\n"))
            elif block:
                counters.documents += 1
                yield Document(f"{name}:{ordinal}", "", normalize_text("\n".join(block)))
                ordinal += 1
                block = []
    if block:
        counters.documents += 1
        yield Document(f"{name}:{ordinal}", "", normalize_text("\n".join(block)))


def _token_before_dot(text: str, dot: int) -> str:
    """The maximal letter/dot run ending at ``dot``, dot included.

    For "met Dr. Who" with dot at index 6 this returns "Dr."; for
    "the U.S. flag" at the final dot it returns "U.S.".
    """
    i = dot
    while i > 0 and (text[i - 1].isalpha() or text[i - 1] == "."):
        i -= 1
    return text[i : dot + 1]


def _is_abbreviation(text: str, dot: int) -> bool:
    token = _token_before_dot(text, dot)
    if token in ABBREVIATIONS:
        return True
    # Single-letter initials: "J. Smith", "George W. Bush".
    return len(token) == 2 and token[0].isupper()


def _is_boundary(text: str, last: int) -> bool:
    """True if the terminator run ending at ``last`` closes a sentence."""
    nxt = last + 1
    if nxt >= len(text):
        return True
    if not text[nxt].isspace():
        return False
    while nxt < len(text) and text[nxt].isspace():
        nxt += 1
    if nxt >= len(text):
        return True
    ch = text[nxt]
    return ch.isupper() or ch.isdigit() or ch in _OPENING_QUOTES


def segment_sentences(doc: Document) -> list[Sentence]:
    """Split a document into trimmed, offset-faithful sentences.

    Guarantees: ``doc.text[s.start:s.end] == s.text`` for every sentence,
    sentences are ordered and non-overlapping, and everything between them
    is whitespace.
    """
    text = doc.text
    sentences: list[Sentence] = []
    begin = 0
    i = 0
    n = len(text)

    def emit(lo: int, hi: int) -> None:
        while lo < hi and text[lo].isspace():
            lo += 1
        while hi > lo and text[hi - 1].isspace():
            hi -= 1
        if lo >= hi:
            return
        ordinal = len(sentences)
        sentences.append(
            Sentence(
                sent_id=f"{doc.doc_id}:{ordinal}",
                doc_id=doc.doc_id,
                ordinal=ordinal,
                text=text[lo:hi],
                start=lo,
                end=hi,
            )
        )

    while i < n:
        ch = text[i]
        if ch not in SENTENCE_TERMINATORS:
            i += 1
            continue
        # Swallow the whole terminator run plus trailing closers ("..." , ?!")
        last = i
        while last + 1 < n and text[last + 1] in SENTENCE_TERMINATORS:
            last += 1
        while last + 1 < n and text[last + 1] in _CLOSERS:
            last += 1
        if last == i and ch == "." and _is_abbreviation(text, i):
            i += 1
            continue
        if _is_boundary(text, last):
            emit(begin, last + 1)
            begin = last + 1
        i = last + 1

    emit(begin, n)
    return sentences


def iter_corpus_sentences(documents: Iterable[Document]) -> Iterator[Sentence]:
    """Segment a document stream into one flat sentence stream."""
    for doc in documents:
        yield from segment_sentences(doc)
