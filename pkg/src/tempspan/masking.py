"""Turn (sentence, spans) pairs into corrupted-input / target examples.

Three strategies share one corruption format: the chosen span is replaced
by the literal sentinel ``_X_`` and becomes the target.

* tsm      -- one example per temporal span; a sentence with four spans
              yields four examples.
* ssm      -- entity and regex-date spans are merged, and exactly one of
              them is masked, chosen uniformly by a per-sentence seed.
* entities -- ssm with the regex-date spans removed; only entities are
              ever masked.

Replacing the sentinel in ``inputs`` with ``targets`` reconstructs the
sentence exactly.  Sentences that already contain the sentinel literal,
and over-length sentences, are skipped (the pipeline counts them).

The ssm/entities span choice must not depend on processing order, so the
random pick is derived from (global seed, sent_id) via sha256 rather than
from shared generator state; shards can then be produced in parallel and
merged without changing a single byte.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import SpanBoundsError
from .ingest import MAX_MASKABLE_SENTENCE, Sentence
from .rules import TemporalSpan
from .salient import SalientKind, SalientSpan, resolve_salient_overlaps

SENTINEL = "_X_"


class Strategy(str, Enum):
    TSM = "tsm"
    SSM = "ssm"
    ENTITIES = "entities"


@dataclass(frozen=True)
class MaskedExample:
    example_id: str
    sent_id: str
    strategy: Strategy
    span_type: str
    inputs: str
    targets: str
    span_start: int
    span_end: int

    def to_record(self) -> dict:
        return {
            "example_id": self.example_id,
            "sent_id": self.sent_id,
            "strategy": self.strategy.value,
            "span_type": self.span_type,
            "inputs": self.inputs,
            "targets": self.targets,
            "span_start": self.span_start,
            "span_end": self.span_end,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "MaskedExample":
        return cls(
            example_id=rec["example_id"],
            sent_id=rec["sent_id"],
            strategy=Strategy(rec["strategy"]),
            span_type=rec["span_type"],
            inputs=rec["inputs"],
            targets=rec["targets"],
            span_start=rec["span_start"],
            span_end=rec["span_end"],
        )


def corrupt(sentence_text: str, start: int, end: int) -> tuple[str, str]:
    """Drop [start, end) out of the sentence: returns (inputs, targets)."""
    if not (0 <= start < end <= len(sentence_text)):
        raise SpanBoundsError(
            f"span ({start},{end}) does not fit sentence of length "
            f"{len(sentence_text)}: {sentence_text[:60]!r}"
        )
    inputs = sentence_text[:start] + SENTINEL + sentence_text[end:]
    return inputs, sentence_text[start:end]


def sentence_skip_reason(text: str) -> str | None:
    """Why a sentence is excluded from masking, or None if eligible."""
    if SENTINEL in text:
        return "sentinel_collision"
    if len(text) > MAX_MASKABLE_SENTENCE:
        return "overlength"
    return None


def _build(sentence: Sentence, strategy: Strategy, span_type: str,
           start: int, end: int) -> MaskedExample:
    inputs, targets = corrupt(sentence.text, start, end)
    return MaskedExample(
        example_id=f"{sentence.sent_id}#{strategy.value}#{start}:{end}",
        sent_id=sentence.sent_id,
        strategy=strategy,
        span_type=span_type,
        inputs=inputs,
        targets=targets,
        span_start=start,
        span_end=end,
    )


def make_tsm_examples(
    sentence: Sentence,
    spans: Sequence[TemporalSpan],
) -> list[MaskedExample]:
    """One example per temporal span, each masking exactly that span."""
    if sentence_skip_reason(sentence.text) is not None:
        return []
    return [
        _build(sentence, Strategy.TSM, span.type.value, span.start, span.end)
        for span in spans
    ]


def _choose_index(seed: int, sent_id: str, n: int) -> int:
    """Uniform pick in [0, n), stable across runs, platforms and shards."""
    digest = hashlib.sha256(f"{seed}|{sent_id}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") % n


def make_ssm_example(
    sentence: Sentence,
    entity_spans: Sequence[SalientSpan],
    date_spans: Sequence[SalientSpan],
    rng_seed: int,
) -> MaskedExample | None:
    """Mask one salient span (entity or regex date), or None if there is none."""
    if sentence_skip_reason(sentence.text) is not None:
        return None
    merged = resolve_salient_overlaps(list(entity_spans) + list(date_spans))
    if not merged:
        return None
    span = merged[0] if len(merged) == 1 else \
        merged[_choose_index(rng_seed, sentence.sent_id, len(merged))]
    span_type = "entity" if span.kind is SalientKind.ENTITY else "regex_date"
    return _build(sentence, Strategy.SSM, span_type, span.start, span.end)


def make_entities_example(
    sentence: Sentence,
    entity_spans: Sequence[SalientSpan],
    rng_seed: int,
) -> MaskedExample | None:
    """The ssm task with all regex-date spans removed."""
    if sentence_skip_reason(sentence.text) is not None:
        return None
    merged = resolve_salient_overlaps(entity_spans)
    if not merged:
        return None
    span = merged[0] if len(merged) == 1 else \
        merged[_choose_index(rng_seed, sentence.sent_id, len(merged))]
    return _build(sentence, Strategy.ENTITIES, "entity", span.start, span.end)
