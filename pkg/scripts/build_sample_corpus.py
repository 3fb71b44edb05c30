#!/usr/bin/env python3
"""Builds src/tempspan/data/sample_corpus.jsonl.

A seeded, synthetic encyclopedic corpus of ~10k sentences used by the
test suite and the demo scripts.  Sentence categories are weighted so
that date expressions dominate the temporal distribution (mirroring what
rule-based tagging of encyclopedic text produces) and so that just under
half of entity-bearing sentences also carry a temporal span.

The script finishes by segmenting and tagging its own output and
printing the observed distribution — a diagnostic, not an annotation;
the corpus ships without labels.

Deterministic: re-running produces an identical file.
"""

import json
import random
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))
from corpusgen import (FAMILY_NAMES, GIVEN_NAMES, ORG_KINDS, ORG_STEMS,
                       PLACES)  # noqa: E402

OUT = Path(__file__).resolve().parent.parent / "src" / "tempspan" / "data" / "sample_corpus.jsonl"

TARGET_SENTENCES = 10_250

MONTHS = ["January", "February", "March", "April", "May", "June", "July",
          "August", "September", "October", "November", "December"]

DURATIONS = ["two weeks", "3 days", "seven months", "an hour", "half an hour",
             "six years", "45 minutes", "a decade", "three decades",
             "ten days", "2 years", "eighteen months"]

SETS = ["every year", "twice a year", "every Monday", "each month",
        "every other week", "daily", "annually", "every morning",
        "three times a week", "once per month"]

# Forms ending in "." ("a.m.", "p.m.") stay mid-sentence: at sentence end
# their final dot would read as (or collide with) the sentence period.
CLOCKS_FINAL = ["9 am", "15:30", "3:45 pm", "08:00", "noon", "midnight",
                "6:20 am", "19:15"]
CLOCKS_ANY = CLOCKS_FINAL + ["11:05 a.m.", "7 p.m."]

NEITHER = [
    "The building survived the fire.",
    "The collection includes ceramics and textiles.",
    "Local volunteers maintain the gardens.",
    "The harbor remains busy throughout the season.",
    "Critics praised the restoration.",
    "The proposal drew wide support.",
    "Admission is free for students.",
    "The archive holds thousands of letters.",
    "The bell tower dominates the skyline.",
    "Visitors praise the quiet reading rooms.",
    "The facade features pale limestone.",
    "A footbridge crosses the canal nearby.",
]


def main():
    rng = random.Random(20260817)

    def person():
        return f"{rng.choice(GIVEN_NAMES)} {rng.choice(FAMILY_NAMES)}"

    def org():
        return f"the {rng.choice(ORG_STEMS)} {rng.choice(ORG_KINDS)}"

    def cap(s):
        # sentence-initial position needs an uppercase opener, or the
        # segmenter rightly refuses to split before it
        return s[0].upper() + s[1:]

    def place():
        return rng.choice(PLACES)

    def full_date():
        return f"{rng.choice(MONTHS)} {rng.randint(1, 28)}, {rng.randint(1800, 2025)}"

    def any_date():
        roll = rng.random()
        if roll < 0.55:
            return full_date()
        if roll < 0.70:
            return f"{rng.randint(1, 28)} {rng.choice(MONTHS)} {rng.randint(1800, 2025)}"
        if roll < 0.80:
            return f"{rng.choice(MONTHS)} {rng.randint(1800, 2025)}"
        if roll < 0.90:
            return str(rng.randint(1800, 2025))
        return f"{rng.randint(1900, 2025)}-{rng.randint(1, 12):02d}-{rng.randint(1, 28):02d}"

    def year():
        return str(rng.randint(1800, 2025))

    # One maker per sentence category; weights tuned so dates lead the
    # temporal type counts and ~45% of entity sentences carry a span.
    def bio_date(subject):
        p = subject or person()
        return rng.choice([
            f"{p} was born in {place()} on {full_date()}.",
            f"{p} was born on {full_date()} in {place()}.",
            f"{p} died in {place()} on {full_date()}.",
            f"{p} married {person()} on {full_date()}.",
            f"{p} first exhibited in {place()} on {any_date()}.",
        ])

    def ent_year(subject):
        p = subject or person()
        return rng.choice([
            f"{p} was elected to the council in {year()}.",
            f"{p} joined {org()} in {year()}.",
            f"{p} retired in {year()}.",
            f"{p} published a memoir in {year()}.",
            f"{p} settled in {place()} in {year()}.",
        ])

    def founded(subject):
        return rng.choice([
            f"{cap(org())} was founded by {subject or person()} in {year()}.",
            f"{subject or person()} established {org()} in {place()} in {year()}.",
            f"{cap(org())} opened its first branch in {place()} in {year()}.",
        ])

    def dur_ent(subject):
        p = subject or person()
        return rng.choice([
            f"{p} served as director for {rng.choice(DURATIONS)}.",
            f"{p} lived in {place()} for {rng.choice(DURATIONS)}.",
            f"{p} trained with {person()} for {rng.choice(DURATIONS)}.",
        ])

    def set_ent(subject):
        p = subject or person()
        return rng.choice([
            f"{p} visits {place()} {rng.choice(SETS)}.",
            f"{cap(org())} hosts a public lecture {rng.choice(SETS)}.",
            f"{p} writes to {person()} {rng.choice(SETS)}.",
        ])

    def time_ent(subject):
        p = subject or person()
        return rng.choice([
            f"The interview with {p} began at {rng.choice(CLOCKS_FINAL)}.",
            f"{p} arrives at the studio at {rng.choice(CLOCKS_FINAL)}.",
            f"{cap(org())} opens at {rng.choice(CLOCKS_ANY)} on weekdays.",
        ])

    def ent_only(subject):
        p = subject or person()
        return rng.choice([
            f"{p} moved to {place()}.",
            f"{cap(org())} acquired {org()}.",
            f"{p} studied under {person()}.",
            f"{p} curated an exhibition at {org()}.",
            f"{cap(org())} maintains an office in {place()}.",
            f"{p} collaborated with {person()} on a catalog of coastal flora.",
            f"The mayor of {place()} praised the initiative.",
            f"{p} translated the collected letters of {person()}.",
            f"{p} designed the pavilion beside the harbor of {place()}.",
        ])

    def temporal_only(_subject):
        return rng.choice([
            f"The renovation lasted {rng.choice(DURATIONS)}.",
            f"Construction finished in {year()}.",
            f"The charter was ratified on {full_date()}.",
            f"Trains depart {rng.choice(SETS)}.",
            f"The ceremony began at {rng.choice(CLOCKS_FINAL)}.",
            f"It reopened on {any_date()}.",
            f"Doors open at {rng.choice(CLOCKS_FINAL)}.",
            f"The journey takes {rng.choice(DURATIONS)}.",
            f"Restoration work began in {rng.choice(MONTHS)} {year()}.",
        ])

    def neither(_subject):
        return rng.choice(NEITHER)

    makers = [
        (bio_date, 0.13), (ent_year, 0.06), (founded, 0.05),
        (dur_ent, 0.03), (set_ent, 0.015), (time_ent, 0.025),
        (ent_only, 0.36), (temporal_only, 0.16), (neither, 0.17),
    ]
    weights = [w for _, w in makers]

    docs = []
    total = 0
    i = 0
    while total < TARGET_SENTENCES:
        subject = person() if rng.random() < 0.7 else None
        title = subject or f"The {rng.choice(ORG_STEMS)} {rng.choice(ORG_KINDS)}"
        n = rng.randint(8, 16)
        sents = []
        for _ in range(n):
            maker = rng.choices([m for m, _ in makers], weights=weights)[0]
            # reuse the doc subject most of the time, like a biography does
            sents.append(maker(subject if rng.random() < 0.8 else None))
        docs.append({"id": f"sample-{i:04d}", "title": title,
                     "text": " ".join(sents)})
        total += n
        i += 1

    # A few deliberately awkward documents the pipeline must cope with:
    # abbreviation-dense prose, an overlength sentence, a sentinel
    # collision, and CRLF line endings.
    docs.append({
        "id": f"sample-{i:04d}", "title": "Abbreviations",
        "text": ("Dr. Moreau joined the Meridian Institute on March 3, 1921. "
                 "Prof. Weiss disagreed with Mr. Novak at the U.S. embassy. "
                 "The seminar met on Jan. 5, 1922. St. Petersburg hosted "
                 "the next congress."),
    })
    long_clause = ", ".join(["the catalog grew"] * 200)
    docs.append({
        "id": f"sample-{i + 1:04d}", "title": "Overlength",
        "text": (f"Under the charter of January 5, 1901, {long_clause}. "
                 "A short closing sentence followed."),
    })
    docs.append({
        "id": f"sample-{i + 2:04d}", "title": "Artifacts",
        "text": ("The template literal _X_ appears here on January 2, 1950. "
                 "The rest of the page reads normally."),
    })
    docs.append({
        "id": f"sample-{i + 3:04d}", "title": "Line endings",
        "text": ("The press released a note on May 4, 2005.\r\nIt was "
                 "reprinted in Porto a week later."),
    })

    OUT.parent.mkdir(parents=True, exist_ok=True)
    with OUT.open("w", encoding="utf-8") as fh:
        for doc in docs:
            fh.write(json.dumps(doc, ensure_ascii=False) + "\n")
    print(f"wrote {len(docs)} documents (~{total} planned sentences) to {OUT}")

    # Diagnostic pass: what does the toolkit itself see in this corpus?
    from tempspan import (heuristic_entities, iter_corpus_sentences,
                          parse_temporal, read_documents)
    type_sentences = Counter()
    ent_sents = temporal_and_ent = n_sents = 0
    for sent in iter_corpus_sentences(read_documents(OUT, "jsonl")):
        n_sents += 1
        types = {s.type.value for s in parse_temporal(sent.text, sent_id=sent.sent_id)}
        for t in types:
            type_sentences[t] += 1
        if heuristic_entities(sent.text, sent.sent_id):
            ent_sents += 1
            if types:
                temporal_and_ent += 1
    print(f"segmented sentences: {n_sents}")
    print(f"sentences by temporal type: {dict(type_sentences)}")
    print(f"entity sentences: {ent_sents}; with temporal span: "
          f"{temporal_and_ent} ({temporal_and_ent / ent_sents:.1%})")


if __name__ == "__main__":
    main()
