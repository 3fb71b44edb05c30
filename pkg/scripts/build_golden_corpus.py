#!/usr/bin/env python3
"""Builds tests/data/golden_temporal.jsonl.

Every record is a sentence assembled from parts whose expected spans are
known *by construction*: temporal surfaces are embedded in templates made
only of neutral vocabulary (no grammar trigger tokens), so the expected
output is exactly the embedded surfaces at offsets computed while
assembling the string.  The tagger is never consulted here — the test
suite is where construction and implementation meet.

Documented over-matches ("a second", bare 4-digit room numbers, verb
"march" before a number) and documented misses (bare month names, "dawn")
are included with their expected behavior spelled out.

Deterministic: re-running produces an identical file.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
from corpusgen import SURFACES_BY_TYPE  # noqa: E402

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "golden_temporal.jsonl"

# (prefix, suffix) pairs per type; prefix has no trailing space.  All
# template words must stay outside the grammar's trigger vocabulary.
TEMPLATES = {
    "date": [
        ("The treaty was signed", "."),
        ("She filed the report", "."),
        ("The bridge reopened", ", as planned."),
        ("Results were announced", "."),
        ("The election was held", "."),
        ("The café reopened", " after a long closure."),
    ],
    "time": [
        ("The ceremony begins", "."),
        ("The archive closes", "."),
        ("Rehearsal starts", ", according to the notice."),
        ("The patrol departs", "."),
        ("The broadcast ended", "."),
        ("Registration opens", "."),
    ],
    "duration": [
        ("The renovation lasted", "."),
        ("She waited", "."),
        ("The recording runs for", "."),
        ("The debate stretched over", "."),
        ("He rehearsed for", "."),
        ("The crossing takes", "."),
    ],
    "set": [
        ("Deliveries occur", "."),
        ("Classes meet", "."),
        ("The committee convenes", "."),
        ("She trains", "."),
        ("The service runs", "."),
        ("Backups happen", "."),
    ],
}

# Sentences given as parts: plain strings, or (surface, type, rule_id)
# triples that become expected spans at their assembled offsets.
CURATED = [
    # The four canonical single-span sentences, one per type.
    ["See you ", ("next Monday", "time", "time_deictic"), "."],
    ["It took ", ("3 days", "duration", "dur_cardinal_unit"), "."],
    ["Elections are held ", ("every 4 years", "set", "set_every"), "."],
    ["She was born on ", ("January 1", "date", "date_month_day"), "."],
    # Multi-span sentences.
    ["The war lasted from ", ("1914", "date", "date_year"), " to ",
     ("1918", "date", "date_year"), "."],
    ["", ("Every Monday", "set", "set_every"), ", the patrol departs at ",
     ("15:30", "time", "time_clock"), "."],
    ["She waited ", ("two weeks", "duration", "dur_cardinal_unit"),
     " and left on ", ("March 3rd", "date", "date_month_day"), "."],
    ["The ceremony on ", ("June 5, 1950", "date", "date_month_day_year"),
     " began at ", ("noon", "time", "time_daypart"), " and lasted ",
     ("an hour", "duration", "dur_article_unit"), "."],
    ["The summit ran from ", ("3 June 1998", "date", "date_day_month_year"),
     " to ", ("6 June 1998", "date", "date_day_month_year"), "."],
    ["Payments are due ", ("every month", "set", "set_every"), " at ",
     ("09:00", "time", "time_clock"), "."],
    ["", ("Yesterday", "date", "date_deictic_day"), " she waited ",
     ("half an hour", "duration", "dur_half_unit"), "."],
    ["The exhibit opened ", ("yesterday", "date", "date_deictic_day"),
     " and closes ", ("tomorrow", "date", "date_deictic_day"), "."],
    ["Trains leave ", ("every 20 minutes", "set", "set_every"), " until ",
     ("midnight", "time", "time_daypart"), "."],
    ["The meeting moved from ", ("Monday", "date", "date_weekday"), " to ",
     ("Thursday", "date", "date_weekday"), "."],
    ["On ", ("January 1", "date", "date_month_day"),
     " the archive closes at ", ("noon", "time", "time_daypart"), "."],
    ["The lease runs ", ("14 months", "duration", "dur_cardinal_unit"),
     ", starting ", ("2025-01-15", "date", "date_iso"), "."],
    ["The flight departs ", ("tomorrow", "date", "date_deictic_day"),
     " at ", ("6:40 am", "time", "time_clock"), "."],
    ["The policy dates from ",
     ("January 1, 1990", "date", "date_month_day_year"), "."],
    ["The contract was signed on ",
     ("January 12 2004", "date", "date_month_day_year"), "."],
    ["The 🎉 gala starts ", ("tonight", "time", "time_daypart"), "."],
    # Documented misses: bare month names and "dawn" are not in the
    # grammar, so only the other span is expected.
    ["He travels ", ("twice a year", "set", "set_times_per"),
     ", usually in October."],
    ["She swims ", ("daily", "set", "set_freq_adverb"), ", usually at dawn."],
    # Documented over-matches.
    ["She has ", ("a second", "duration", "dur_article_unit"),
     " opinion on the matter."],
    ["Room ", ("2048", "date", "date_year"), " is locked."],
    ["The troops ", ("march 14", "date", "date_month_day"),
     " miles in silence."],
    # Lowercase dialog style: the grammar is case-insensitive.
    ["see you ", ("next monday", "time", "time_deictic"), "."],
    ["the meeting is at ", ("3 pm", "time", "time_clock_ampm"), "."],
    ["call me ", ("tomorrow", "date", "date_deictic_day"), " after lunch."],
    ["i waited ", ("an hour", "duration", "dur_article_unit"), " for the bus."],
    ["she runs ", ("every sunday", "set", "set_every"), " with her club."],
]

# Expected output: no spans at all.  Some contain trigger tokens that no
# rule completes on ("two districts", "15:305", "Seconds later").
NEGATIVES = [
    "No temporal content here.",
    "The committee approved the proposal without further debate.",
    "Her essay won the national prize.",
    "The bridge connects the two districts.",
    "The score was 15:305 overall.",
    "He bought 305 apples.",
    "The catalog lists 12,450 items.",
    "A gentle breeze crossed the valley.",
    "They debated the motion at length.",
    "Students painted the mural together.",
    "The tower stands beside the river.",
    "The recipe calls for sugar and flour.",
    "Seconds later, the lights failed.",
]


def assemble(parts):
    """Concatenates parts, recording expected spans as offsets accrue."""
    text = ""
    spans = []
    for part in parts:
        if isinstance(part, str):
            text += part
        else:
            surface, type_, rule_id = part
            start = len(text)
            text += surface
            spans.append({
                "type": type_, "start": start, "end": len(text),
                "surface": surface, "rule_id": rule_id,
            })
    return text, spans


def records():
    for parts in CURATED:
        yield assemble(parts)
    for type_, surfaces in SURFACES_BY_TYPE.items():
        for surface, rule_id, prep in surfaces:
            for prefix, suffix in TEMPLATES[type_]:
                if surface.endswith(".") and suffix == ".":
                    suffix = ""  # "7 p.m." already closes the sentence
                yield assemble(
                    [f"{prefix} {prep}", (surface, type_, rule_id), suffix])
    for text in NEGATIVES:
        yield text, []


def main():
    OUT.parent.mkdir(parents=True, exist_ok=True)
    n = 0
    with OUT.open("w", encoding="utf-8") as fh:
        for i, (text, spans) in enumerate(records()):
            rec = {"sent_id": f"golden:{i:04d}", "text": text, "spans": spans}
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")
            n += 1
    print(f"wrote {n} sentences to {OUT}")


if __name__ == "__main__":
    main()
