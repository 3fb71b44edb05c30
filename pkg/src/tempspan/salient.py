"""Salient span sources: regex-detected dates and named-entity spans.

Entity spans normally come from an annotation file produced by an external
NER system (jsonl: ``{"sent_id": ..., "spans": [{"start","end","label"}]}``).
When no file is available, ``heuristic_entities`` approximates them from
capitalization so the pipeline still runs end to end; output produced that
way is labeled as heuristic in the run manifest.

Date detection reuses the date family of the temporal grammar rather than
keeping a second regex collection: ``detect_dates`` returns exactly the
date-typed spans of a full parse, relabeled.  That keeps one source of
truth and makes "regex dates are a subset of the tagger's date output"
true by construction (a date swallowed by a longer span of another type,
e.g. "Monday" inside "next Monday", is absent from both sides).
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Mapping

from .errors import SpanBoundsError
from .ingest import Sentence
from .rules import RuleSet, parse_temporal, TemporalType

log = logging.getLogger(__name__)


class SalientKind(str, Enum):
    ENTITY = "entity"
    REGEX_DATE = "regex_date"


@dataclass(frozen=True)
class SalientSpan:
    sent_id: str
    kind: SalientKind
    start: int
    end: int
    surface: str

    def to_record(self) -> dict:
        return {
            "sent_id": self.sent_id,
            "kind": self.kind.value,
            "start": self.start,
            "end": self.end,
            "surface": self.surface,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "SalientSpan":
        return cls(
            sent_id=rec["sent_id"],
            kind=SalientKind(rec["kind"]),
            start=rec["start"],
            end=rec["end"],
            surface=rec["surface"],
        )


def detect_dates(
    text: str,
    rules: RuleSet | None = None,
    sent_id: str = "",
) -> list[SalientSpan]:
    """Regex-date spans for one sentence: the date output of the tagger."""
    return [
        SalientSpan(
            sent_id=sent_id,
            kind=SalientKind.REGEX_DATE,
            start=span.start,
            end=span.end,
            surface=span.surface,
        )
        for span in parse_temporal(text, rules, sent_id=sent_id)
        if span.type is TemporalType.DATE
    ]


def load_entity_annotations(
    path: str | Path,
    sentences: Mapping[str, Sentence],
    strict: bool = False,
) -> tuple[dict[str, list[SalientSpan]], list[str]]:
    """Load and validate an entity annotation file.

    Returns ``(spans_by_sent_id, errors)``; every listed sent_id maps to a
    (possibly empty) list of entity spans.  Invalid spans and unresolvable
    sent_ids are dropped and reported in ``errors`` — or raised immediately
    in strict mode.  A missing file is always fatal.
    """
    path = Path(path)
    if not path.is_file():
        raise SpanBoundsError(f"cannot read entity annotation file: {path}")

    out: dict[str, list[SalientSpan]] = {}
    errors: list[str] = []

    def problem(msg: str) -> None:
        if strict:
            raise SpanBoundsError(msg)
        errors.append(msg)
        log.warning("%s", msg)

    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                problem(f"{path}:{lineno}: invalid JSON ({exc.msg})")
                continue
            sent_id = rec.get("sent_id")
            sentence = sentences.get(sent_id) if isinstance(sent_id, str) else None
            if sentence is None:
                problem(f"{path}:{lineno}: unknown sent_id {sent_id!r}")
                continue
            spans = out.setdefault(sent_id, [])
            for item in rec.get("spans", []):
                try:
                    start, end = int(item["start"]), int(item["end"])
                except (KeyError, TypeError, ValueError):
                    problem(f"{path}:{lineno}: malformed span entry {item!r}")
                    continue
                if not (0 <= start < end <= len(sentence.text)):
                    problem(
                        f"{path}:{lineno}: span ({start},{end}) out of bounds "
                        f"for sentence {sent_id} (length {len(sentence.text)})"
                    )
                    continue
                spans.append(SalientSpan(
                    sent_id=sent_id,
                    kind=SalientKind.ENTITY,
                    start=start,
                    end=end,
                    surface=sentence.text[start:end],
                ))
    return out, errors


# Sentence-initial tokens whose capitalization carries no entity signal.
# A run that opens the sentence first has such a token stripped; what
# remains (if anything) is kept.
_SENTENCE_STARTERS = frozenset("""
    a an the it he she we they i you this that these those there here
    in on at by for from with but and or as if when while after before
    during since until his her its their our my your no not now then so
    also both each every some many most all one two few several because
    although though however meanwhile yet still once again
""".split())

# Capitalized words already claimed by the temporal grammar; they never
# join an entity run.  Month abbreviations mirror the ones the date
# rules accept, so "Jan" inside "Jan. 5, 1901" is a date, not a name.
_TEMPORAL_WORDS = frozenset(
    w.lower() for w in (
        "January February March April May June July August September "
        "October November December Monday Tuesday Wednesday Thursday "
        "Friday Saturday Sunday Today Yesterday Tomorrow Tonight "
        "Jan Feb Mar Apr Jun Jul Aug Sept Sep Oct Nov Dec"
    ).split()
)

_WORD = re.compile(r"[^\W\d_][\w'’-]*")


def heuristic_entities(text: str, sent_id: str = "") -> list[SalientSpan]:
    """Approximate entity spans as runs of capitalized tokens.

    A run breaks on lowercase tokens, on punctuation between tokens and on
    month/weekday names.  A run that starts the sentence drops a leading
    function word ("The Ming dynasty" -> "Ming"); if the run was nothing
    but the sentence-initial token, it is dropped entirely, since initial
    capitalization alone is no evidence of an entity.
    """
    tokens = [
        (m.start(), m.end(), m.group())
        for m in _WORD.finditer(text)
    ]
    runs: list[list[tuple[int, int, str]]] = []
    current: list[tuple[int, int, str]] = []
    for tok in tokens:
        start, end, word = tok
        capitalized = word[0].isupper() and word.lower() not in _TEMPORAL_WORDS
        adjacent = bool(current) and text[current[-1][1]:start].isspace()
        if capitalized and (not current or adjacent):
            current.append(tok)
        else:
            if current:
                runs.append(current)
            current = [tok] if capitalized else []
    if current:
        runs.append(current)

    spans: list[SalientSpan] = []
    for run in runs:
        if tokens and run[0][0] == tokens[0][0]:
            # Sentence-initial run: strip a leading function word, and
            # reject the run if only the initial token remains of it.
            if run[0][2].lower() in _SENTENCE_STARTERS:
                run = run[1:]
            elif len(run) == 1:
                continue
            if not run:
                continue
        start, end = run[0][0], run[-1][1]
        spans.append(SalientSpan(
            sent_id=sent_id,
            kind=SalientKind.ENTITY,
            start=start,
            end=end,
            surface=text[start:end],
        ))
    return spans


def resolve_salient_overlaps(spans: Iterable[SalientSpan]) -> list[SalientSpan]:
    """Greedy non-overlap selection: longest, entities before regex dates,
    then leftmost."""
    ordered = sorted(
        spans,
        key=lambda s: (-(s.end - s.start), s.kind is not SalientKind.ENTITY, s.start),
    )
    chosen: list[SalientSpan] = []
    for span in ordered:
        if all(span.end <= c.start or span.start >= c.end for c in chosen):
            chosen.append(span)
    chosen.sort(key=lambda s: s.start)
    return chosen
