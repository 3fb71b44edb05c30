"""Corpus-level span statistics.

Counts are sentence-level: a sentence with three date spans counts once
toward the date row, matching the convention that each table row is a
number of sentences.  The headline figure is the fraction of
entity-bearing sentences that also carry at least one temporal span of
any type; because the entities strategy emits exactly one example per
entity-bearing sentence, the same number is also the example-level
fraction, and the JSON report carries it under both names.

Stats objects merge associatively and commutatively over disjoint
sentence shards, so counting can be fanned out and recombined.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .errors import StatsError
from .ingest import Sentence
from .rules import TemporalSpan, TemporalType
from .salient import SalientKind, SalientSpan

_TYPE_ORDER = (TemporalType.DATE, TemporalType.DURATION,
               TemporalType.SET, TemporalType.TIME)
_KIND_ORDER = (SalientKind.ENTITY, SalientKind.REGEX_DATE)


@dataclass
class CorpusStats:
    total_sentences: int = 0
    sentences_with_type: dict[TemporalType, int] = field(
        default_factory=lambda: {t: 0 for t in _TYPE_ORDER})
    sentences_with_entity: int = 0
    sentences_with_regex_date: int = 0
    cooccurrence: dict[tuple[SalientKind, TemporalType], int] = field(
        default_factory=lambda: {(k, t): 0 for k in _KIND_ORDER for t in _TYPE_ORDER})
    entity_sentences_with_temporal: int = 0

    @property
    def fraction_entity_sentences_with_temporal(self) -> float:
        if self.sentences_with_entity == 0:
            return 0.0
        return self.entity_sentences_with_temporal / self.sentences_with_entity

    def merge(self, other: "CorpusStats") -> "CorpusStats":
        """Combine counts from a disjoint sentence shard."""
        out = CorpusStats()
        out.total_sentences = self.total_sentences + other.total_sentences
        out.sentences_with_type = {
            t: self.sentences_with_type[t] + other.sentences_with_type[t]
            for t in _TYPE_ORDER
        }
        out.sentences_with_entity = self.sentences_with_entity + other.sentences_with_entity
        out.sentences_with_regex_date = (
            self.sentences_with_regex_date + other.sentences_with_regex_date)
        out.cooccurrence = {
            key: self.cooccurrence[key] + other.cooccurrence[key]
            for key in self.cooccurrence
        }
        out.entity_sentences_with_temporal = (
            self.entity_sentences_with_temporal + other.entity_sentences_with_temporal)
        return out

    def to_json_dict(self) -> dict:
        fraction = self.fraction_entity_sentences_with_temporal
        return {
            "total_sentences": self.total_sentences,
            "sentences_with_type": {
                t.value: self.sentences_with_type[t] for t in _TYPE_ORDER
            },
            "sentences_with_entity": self.sentences_with_entity,
            "sentences_with_regex_date": self.sentences_with_regex_date,
            "cooccurrence": {
                k.value: {
                    t.value: self.cooccurrence[(k, t)] for t in _TYPE_ORDER
                }
                for k in _KIND_ORDER
            },
            "entity_sentences_with_temporal": self.entity_sentences_with_temporal,
            "fraction_entity_sentences_with_temporal": fraction,
            "fraction_entity_examples_with_temporal": fraction,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CorpusStats":
        stats = cls()
        stats.total_sentences = data["total_sentences"]
        stats.sentences_with_type = {
            t: data["sentences_with_type"][t.value] for t in _TYPE_ORDER
        }
        stats.sentences_with_entity = data["sentences_with_entity"]
        stats.sentences_with_regex_date = data["sentences_with_regex_date"]
        stats.cooccurrence = {
            (k, t): data["cooccurrence"][k.value][t.value]
            for k in _KIND_ORDER for t in _TYPE_ORDER
        }
        stats.entity_sentences_with_temporal = data["entity_sentences_with_temporal"]
        return stats


def compute_stats(
    sentences: Iterable[Sentence],
    temporal_spans: Iterable[TemporalSpan],
    salient_spans: Iterable[SalientSpan],
) -> CorpusStats:
    """Single-pass sentence-level counting.

    Raises StatsError listing every span whose sent_id is not among the
    given sentences.
    """
    sent_ids: set[str] = set()
    stats = CorpusStats()
    for sentence in sentences:
        sent_ids.add(sentence.sent_id)
        stats.total_sentences += 1

    types_by_sent: dict[str, set[TemporalType]] = {}
    kinds_by_sent: dict[str, set[SalientKind]] = {}
    dangling: list[str] = []
    for span in temporal_spans:
        if span.sent_id not in sent_ids:
            dangling.append(f"temporal:{span.sent_id}")
            continue
        types_by_sent.setdefault(span.sent_id, set()).add(span.type)
    for span in salient_spans:
        if span.sent_id not in sent_ids:
            dangling.append(f"salient:{span.sent_id}")
            continue
        kinds_by_sent.setdefault(span.sent_id, set()).add(span.kind)
    if dangling:
        shown = ", ".join(sorted(set(dangling))[:10])
        raise StatsError(
            f"{len(dangling)} span(s) reference unknown sentences: {shown}")

    for sent_id, types in types_by_sent.items():
        for t in types:
            stats.sentences_with_type[t] += 1
    for sent_id, kinds in kinds_by_sent.items():
        if SalientKind.ENTITY in kinds:
            stats.sentences_with_entity += 1
        if SalientKind.REGEX_DATE in kinds:
            stats.sentences_with_regex_date += 1
        types = types_by_sent.get(sent_id, set())
        for k in kinds:
            for t in types:
                stats.cooccurrence[(k, t)] += 1
        if SalientKind.ENTITY in kinds and types:
            stats.entity_sentences_with_temporal += 1
    return stats


def most_frequent_type(stats: CorpusStats) -> TemporalType | None:
    counts = stats.sentences_with_type
    if all(v == 0 for v in counts.values()):
        return None
    return max(_TYPE_ORDER, key=lambda t: counts[t])


def render_report(stats: CorpusStats, table: bool = False) -> str:
    """JSON report, or a human-readable table when ``table`` is set.

    The table puts temporal types on rows, salient kinds on columns, each
    cell the number of sentences carrying both.
    """
    if not table:
        return json.dumps(stats.to_json_dict(), indent=2, ensure_ascii=False)

    lines = []
    lines.append(f"sentences: {stats.total_sentences}")
    lines.append(f"with entity span:      {stats.sentences_with_entity}")
    lines.append(f"with regex date span:  {stats.sentences_with_regex_date}")
    lines.append("")
    header = f"{'temporal type':<14}{'sentences':>12}" + "".join(
        f"{'x ' + k.value:>14}" for k in _KIND_ORDER)
    lines.append(header)
    lines.append("-" * len(header))
    for t in _TYPE_ORDER:
        row = f"{t.value:<14}{stats.sentences_with_type[t]:>12}"
        for k in _KIND_ORDER:
            row += f"{stats.cooccurrence[(k, t)]:>14}"
        lines.append(row)
    lines.append("")
    pct = stats.fraction_entity_sentences_with_temporal * 100.0
    lines.append(f"entity sentences with >=1 temporal span: "
                 f"{stats.entity_sentences_with_temporal} ({pct:.2f}%)")
    return "\n".join(lines)
