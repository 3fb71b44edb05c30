"""Rule-based temporal expression tagger.

Maps raw sentence text to typed, non-overlapping character spans of four
kinds: date, duration, set and time.  The grammar is a documented,
auditable subset of what a full temporal tagger would do:

* date     -- "January 1", "January 1, 1990", "1 January 1990",
              "January 1990", "2020-12-01", "1969", "Monday",
              "today" / "yesterday" / "tomorrow"
* time     -- "15:30", "3 pm", "next Monday", "last week", "this morning",
              bare day-parts ("morning", "noon", "midnight", "tonight")
* duration -- "3 days", "three days", "a minute", "half an hour"
* set      -- "every 4 years", "each day", "twice a week", "daily",
              "annually", "every Monday"

Known deliberate over-matches, shared with any grammar at this level of
ambition: "a second" (ordinal sense), bare 4-digit quantities that look
like years, "daily" as an adjective, verb "march" before a number.
Month and weekday names match case-insensitively.

"next Monday" and "last week" are typed time, not date: deictic point
expressions anchored by next/last/this form their own family here.

Rules are (pattern, type, priority, rule_id) tuples; matching collects
every candidate from every rule and then greedily keeps the longest span,
breaking ties by priority and then by leftmost position.  A ruleset can
be loaded from a TOML or JSON file; ``default_rules()`` returns the
compiled-in grammar above.
"""

from __future__ import annotations

import json
import re
import sys
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import RuleError


class TemporalType(str, Enum):
    DATE = "date"
    DURATION = "duration"
    SET = "set"
    TIME = "time"


@dataclass(frozen=True)
class TemporalSpan:
    """A typed temporal expression located inside one sentence."""

    sent_id: str
    type: TemporalType
    start: int
    end: int
    surface: str
    rule_id: str

    def to_record(self) -> dict:
        return {
            "sent_id": self.sent_id,
            "type": self.type.value,
            "start": self.start,
            "end": self.end,
            "surface": self.surface,
            "rule_id": self.rule_id,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "TemporalSpan":
        return cls(
            sent_id=rec["sent_id"],
            type=TemporalType(rec["type"]),
            start=rec["start"],
            end=rec["end"],
            surface=rec["surface"],
            rule_id=rec["rule_id"],
        )


@dataclass(frozen=True)
class Rule:
    rule_id: str
    type: TemporalType
    priority: int
    pattern: str


# ---------------------------------------------------------------------------
# Lexicon fragments the default grammar is assembled from.

_MONTH_FULL = (
    "January|February|March|April|May|June|July|August|September|October"
    "|November|December"
)
_MONTH_ABBR = (
    r"Jan\.?|Feb\.?|Mar\.?|Apr\.?|Jun\.?|Jul\.?|Aug\.?|Sept\.?|Sep\.?"
    r"|Oct\.?|Nov\.?|Dec\.?"
)
_MONTH = f"(?:{_MONTH_FULL}|{_MONTH_ABBR})"
_WEEKDAY = "(?:Monday|Tuesday|Wednesday|Thursday|Friday|Saturday|Sunday)"
_DAY = r"(?:3[01]|[12]\d|0?[1-9])(?:st|nd|rd|th)?"
_YEAR = r"[12]\d{3}"

_UNIT_SG = "(?:second|minute|hour|day|week|month|year|decade|century)"
_UNIT = "(?:seconds?|minutes?|hours?|days?|weeks?|months?|years?|decades?|centuries|century)"
_DAYPART = "(?:morning|afternoon|evening|noon|midnight|tonight)"
_FREQ_ADV = "(?:hourly|daily|nightly|weekly|fortnightly|monthly|quarterly|yearly|annually)"

_NUM_TEEN = "ten|eleven|twelve|thirteen|fourteen|fifteen|sixteen|seventeen|eighteen|nineteen"
_NUM_UNIT = "zero|one|two|three|four|five|six|seven|eight|nine"
_NUM_TENS = "twenty|thirty|forty|fifty|sixty|seventy|eighty|ninety"
_NUMWORD = f"(?:(?:{_NUM_TENS})(?:[-\\s](?:{_NUM_UNIT}))?|{_NUM_TEEN}|{_NUM_UNIT})"
_NUMERIC = r"(?:\d{1,3}(?:,\d{3})+|\d+(?:\.\d+)?)"
_CARDINAL = f"(?:{_NUMERIC}|{_NUMWORD})"

# Dots are all-or-nothing: "p.m." keeps its final dot, but bare "pm"
# must not swallow an adjacent sentence period.
_AMPM = r"(?:[ap]\.m\.?|[ap]m)(?![A-Za-z])"

DEFAULT_RULE_DEFS: tuple[tuple[str, TemporalType, int, str], ...] = (
    ("date_iso", TemporalType.DATE, 100,
     rf"\b{_YEAR}([-/])(?:0?[1-9]|1[0-2])\1(?:0?[1-9]|[12]\d|3[01])\b"),
    ("date_month_day_year", TemporalType.DATE, 95,
     rf"\b{_MONTH}\s+{_DAY},?\s+{_YEAR}\b"),
    ("date_day_month_year", TemporalType.DATE, 94,
     rf"\b{_DAY}\s+(?:of\s+)?{_MONTH},?\s+{_YEAR}\b"),
    ("date_month_day", TemporalType.DATE, 90, rf"\b{_MONTH}\s+{_DAY}\b"),
    ("date_day_month", TemporalType.DATE, 89,
     rf"\b{_DAY}\s+(?:of\s+)?{_MONTH}(?![a-z])"),
    ("date_month_year", TemporalType.DATE, 85, rf"\b{_MONTH},?\s+{_YEAR}\b"),
    ("time_clock", TemporalType.TIME, 80,
     rf"\b(?:[01]?\d|2[0-3]):[0-5]\d(?::[0-5]\d)?\b(?:\s*{_AMPM})?"),
    ("time_clock_ampm", TemporalType.TIME, 78,
     rf"\b(?:1[0-2]|0?[1-9])(?::[0-5]\d)?\s*{_AMPM}"),
    ("set_times_per", TemporalType.SET, 75,
     rf"\b(?:once|twice|thrice|{_CARDINAL}\s+times)\s+(?:a|an|per|each|every)\s+{_UNIT_SG}\b"),
    ("set_every", TemporalType.SET, 70,
     rf"\b(?:every|each)\s+(?:(?:{_CARDINAL}|other)\s+)?(?:{_UNIT}|{_WEEKDAY}|{_MONTH_FULL}|{_DAYPART})\b"),
    ("time_deictic", TemporalType.TIME, 65,
     rf"\b(?:next|last|this)\s+(?:{_WEEKDAY}|{_MONTH_FULL}|{_DAYPART}|{_UNIT_SG}|weekend|night)\b"),
    ("dur_half_unit", TemporalType.DURATION, 60, rf"\bhalf\s+an?\s+{_UNIT_SG}\b"),
    ("dur_cardinal_unit", TemporalType.DURATION, 55, rf"\b{_CARDINAL}\s+{_UNIT}\b"),
    ("dur_article_unit", TemporalType.DURATION, 50, rf"\ban?\s+{_UNIT_SG}\b"),
    ("set_freq_adverb", TemporalType.SET, 45, rf"\b{_FREQ_ADV}\b"),
    ("date_weekday", TemporalType.DATE, 35, rf"\b{_WEEKDAY}\b"),
    ("time_daypart", TemporalType.TIME, 33, rf"\b{_DAYPART}\b"),
    ("date_deictic_day", TemporalType.DATE, 30, r"\b(?:today|yesterday|tomorrow)\b"),
    ("date_year", TemporalType.DATE, 25, rf"\b{_YEAR}\b"),
)

# Cheap pre-filter: a sentence with no digit and none of these words cannot
# match any rule, so the per-rule scans are skipped entirely.
_TRIGGER = re.compile(
    r"\d|\b(?:" + "|".join([
        _MONTH_FULL,
        "Jan|Feb|Mar|Apr|Jun|Jul|Aug|Sept|Sep|Oct|Nov|Dec",
        _WEEKDAY.strip("(?:)"),
        "seconds?|minutes?|hours?|days?|weeks?|months?|years?|decades?|centuries|century",
        "morning|afternoon|evening|noon|midnight|tonight|night|weekend",
        "today|yesterday|tomorrow",
        "hourly|daily|nightly|weekly|fortnightly|monthly|quarterly|yearly|annually",
        _NUM_TENS, _NUM_TEEN, _NUM_UNIT,
    ]) + r")\b",
    re.IGNORECASE,
)


class RuleSet:
    """Immutable, pre-compiled collection of tagging rules.

    Priorities break ties between equally long overlapping spans; equal
    priorities fall back to list position.  Safe to share across threads.
    """

    def __init__(self, rules: Sequence[Rule]):
        seen: set[str] = set()
        for rule in rules:
            if rule.rule_id in seen:
                raise RuleError(f"duplicate rule_id {rule.rule_id!r}")
            seen.add(rule.rule_id)
        self.rules: tuple[Rule, ...] = tuple(rules)
        try:
            self._compiled = [
                (rule, re.compile(rule.pattern, re.IGNORECASE)) for rule in self.rules
            ]
        except re.error as exc:
            raise RuleError(f"bad rule pattern: {exc}") from exc
        # rule_id -> sort key fragment: higher priority first, then earlier
        # list position.
        self._rank = {
            rule.rule_id: (-rule.priority, idx)
            for idx, rule in enumerate(self.rules)
        }

    def rank(self, rule_id: str) -> tuple[int, int]:
        return self._rank.get(rule_id, (0, len(self.rules)))

    def to_json(self) -> str:
        """Stable serialization, used for rule fingerprints in manifests."""
        return json.dumps(
            [
                {"rule_id": r.rule_id, "type": r.type.value,
                 "priority": r.priority, "pattern": r.pattern}
                for r in self.rules
            ],
            ensure_ascii=False,
        )

    @classmethod
    def from_file(cls, path: str | Path) -> "RuleSet":
        """Load rules from a TOML file ([[rule]] tables) or a JSON array."""
        path = Path(path)
        if not path.is_file():
            raise RuleError(f"cannot read rule file: {path}")
        if path.suffix.lower() == ".toml":
            with path.open("rb") as fh:
                data = tomllib.load(fh)
            entries = data.get("rule")
            if not isinstance(entries, list):
                raise RuleError(f"{path}: expected [[rule]] tables")
        else:
            entries = json.loads(path.read_text(encoding="utf-8"))
            if not isinstance(entries, list):
                raise RuleError(f"{path}: expected a JSON array of rules")
        rules = []
        for i, entry in enumerate(entries):
            try:
                rules.append(Rule(
                    rule_id=entry["rule_id"],
                    type=TemporalType(entry["type"]),
                    priority=int(entry.get("priority", 0)),
                    pattern=entry["pattern"],
                ))
            except (KeyError, ValueError, TypeError) as exc:
                raise RuleError(f"{path}: bad rule entry #{i}: {exc!r}") from exc
        return cls(rules)


_default_rules: RuleSet | None = None


def default_rules() -> RuleSet:
    """The compiled-in grammar (built once, then shared)."""
    global _default_rules
    if _default_rules is None:
        _default_rules = RuleSet([Rule(*d) for d in DEFAULT_RULE_DEFS])
    return _default_rules


def resolve_overlaps(
    candidates: Iterable[TemporalSpan],
    rules: RuleSet | None = None,
) -> list[TemporalSpan]:
    """Greedy non-overlap selection: longest, then priority, then leftmost."""
    if rules is not None:
        def rank(span: TemporalSpan) -> tuple[int, int]:
            return rules.rank(span.rule_id)
    else:
        def rank(span: TemporalSpan) -> tuple[int, int]:
            return (0, 0)

    ordered = sorted(
        candidates,
        key=lambda s: (-(s.end - s.start), *rank(s), s.start, s.rule_id),
    )
    chosen: list[TemporalSpan] = []
    for span in ordered:
        if all(span.end <= c.start or span.start >= c.end for c in chosen):
            chosen.append(span)
    chosen.sort(key=lambda s: s.start)
    return chosen


def parse_temporal(
    text: str,
    rules: RuleSet | None = None,
    sent_id: str = "",
) -> list[TemporalSpan]:
    """Tag one sentence; returns sorted, non-overlapping typed spans.

    Pure and deterministic for a fixed (text, rules) pair; unparseable
    text simply yields an empty list.
    """
    rules = rules if rules is not None else default_rules()
    if rules is _default_rules and not _TRIGGER.search(text):
        return []
    candidates: list[TemporalSpan] = []
    for rule, regex in rules._compiled:
        for match in regex.finditer(text):
            start, end = match.start(), match.end()
            if start == end:
                continue
            candidates.append(TemporalSpan(
                sent_id=sent_id,
                type=rule.type,
                start=start,
                end=end,
                surface=text[start:end],
                rule_id=rule.rule_id,
            ))
    return resolve_overlaps(candidates, rules)
