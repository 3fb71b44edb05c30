"""End-to-end acceptance gates for the toolkit.

Each test is one shipping criterion with its tolerance stated inline;
`pytest -v` prints one pass/fail line per criterion.  The ordering check
on the bundled sample is warning-level by design: the sample and the
rule grammar are stand-ins for the reference corpus and tagger, so a
distribution shift there is a flag to look at, not a defect.
"""

import json
import random
import time
import warnings
from fractions import Fraction

from tempspan import (MixtureComponent, MixtureSpec, PipelineConfig,
                      Sentence, compute_stats, detect_dates,
                      heuristic_entities, iter_corpus_sentences,
                      make_entities_example, make_ssm_example,
                      make_tsm_examples, mix, most_frequent_type,
                      parse_temporal, read_documents, render_report,
                      resolve_salient_overlaps, run_pipeline)
from tempspan.jsonio import write_jsonl
from conftest import make_example_record, write_examples
from test_stats import brute_force_stats


def _sentence(text, sent_id="acc:0"):
    return Sentence(sent_id=sent_id, doc_id="acc", ordinal=0,
                    text=text, start=0, end=len(text))


def test_canonical_four_exemplars_parse_exactly():
    """Four single-span sentences, one per type; runtime < 1s."""
    t0 = time.perf_counter()
    expected = [
        ("See you next Monday.", "time", "next Monday"),
        ("It took 3 days.", "duration", "3 days"),
        ("Elections are held every 4 years.", "set", "every 4 years"),
        ("She was born on January 1.", "date", "January 1"),
    ]
    for text, type_, surface in expected:
        spans = parse_temporal(text)
        assert [(s.type.value, s.surface) for s in spans] == [(type_, surface)]
    assert time.perf_counter() - t0 < 1.0


def test_corruption_format_single_sentinel_round_trip():
    """Masking yields exactly one `_X_` and verbatim targets."""
    text = "She was born on January 1."
    [example] = make_tsm_examples(_sentence(text), parse_temporal(text))
    assert example.inputs == "She was born on _X_."
    assert example.targets == "January 1"
    assert example.inputs.count("_X_") == 1
    assert example.inputs.replace("_X_", example.targets, 1) == text


def test_multiplicity_one_example_per_temporal_span():
    """4 spans -> 4 examples; 10k-sentence fuzz, zero violations, < 30s."""
    t0 = time.perf_counter()
    text = "On January 1 she waits 3 days, then every year at noon."
    spans = parse_temporal(text)
    assert len(spans) == 4
    assert len(make_tsm_examples(_sentence(text), spans)) == 4

    rng = random.Random(0)
    pool = ["January", "Monday", "3", "days", "every", "4", "years", "next",
            "noon", "pm", "15:30", "1999", "twice", "a", "week", "the",
            "quick", "fox", "ran", "over", "tomorrow", "half", "an", "hour",
            "on", ",", "daily", "morning", "2020-12-01", "42nd"]
    violations = 0
    for i in range(10_000):
        text = " ".join(rng.choices(pool, k=rng.randint(1, 14)))
        spans = parse_temporal(text, sent_id=f"fuzz:{i}")
        examples = make_tsm_examples(_sentence(text, f"fuzz:{i}"), spans)
        if len(examples) != len(spans):
            violations += 1
    assert violations == 0
    assert time.perf_counter() - t0 < 30.0


def test_ssm_masks_exactly_one_span_evenly():
    """k>=1 spans -> 1 example; 10k trials split 50% ± 3%."""
    text = "Wolfgang Mozart died in 1791."
    sentence = _sentence(text)
    entities = heuristic_entities(text, sentence.sent_id)
    dates = detect_dates(text, sent_id=sentence.sent_id)
    assert len(entities) == 1 and len(dates) == 1

    counts = {"Wolfgang Mozart": 0, "1791": 0}
    for seed in range(10_000):
        example = make_ssm_example(sentence, entities, dates, seed)
        assert example is not None
        assert example.inputs.count("_X_") == 1
        counts[example.targets] += 1
    share = counts["Wolfgang Mozart"] / 10_000
    assert abs(share - 0.5) <= 0.03, counts


def test_entities_strategy_never_masks_a_date(golden_records):
    """Exhaustive over the golden corpus: no date span is ever chosen."""
    for rec in golden_records:
        sentence = _sentence(rec["text"], rec["sent_id"])
        entities = heuristic_entities(rec["text"], rec["sent_id"])
        dates = detect_dates(rec["text"], sent_id=rec["sent_id"])
        example = make_entities_example(sentence, entities, rng_seed=97)
        if example is None:
            continue
        assert example.span_type == "entity"
        for d in dates:
            overlap = not (example.span_end <= d.start
                           or example.span_start >= d.end)
            assert not overlap, (rec["sent_id"], example.targets, d.surface)


def test_mixture_three_to_one_prefix_bound_and_conservation(tmp_path):
    """±1 proportionality over 100k; conservation; bytes stable; < 60s."""
    t0 = time.perf_counter()
    a = write_examples(tmp_path / "a.jsonl",
                       [make_example_record(i, "a") for i in range(80_000)])
    b = write_examples(tmp_path / "b.jsonl",
                       [make_example_record(i, "b") for i in range(27_000)])
    spec = MixtureSpec(components=(
        MixtureComponent(name="a", path=a, weight=Fraction(3)),
        MixtureComponent(name="b", path=b, weight=Fraction(1)),
    ))
    count_a = count_b = n = 0
    for example in mix(spec):
        n += 1
        if example.sent_id.startswith("a"):
            count_a += 1
        else:
            count_b += 1
        assert abs(count_a - 3 * n / 4) <= 1, f"prefix {n}"
        assert abs(count_b - n / 4) <= 1, f"prefix {n}"
        if n >= 100_000:
            break
    assert n == 100_000

    # conservation: exhaust mode with equal sizes is a permutation
    c = write_examples(tmp_path / "c.jsonl",
                       [make_example_record(i, "c") for i in range(2_000)])
    d = write_examples(tmp_path / "d.jsonl",
                       [make_example_record(i, "d") for i in range(2_000)])
    spec_eq = MixtureSpec(components=(
        MixtureComponent(name="c", path=c, weight=None),
        MixtureComponent(name="d", path=d, weight=None),
    ), mode="exhaust")
    out = [e.example_id for e in mix(spec_eq)]
    assert sorted(out) == sorted(
        make_example_record(i, name)["example_id"]
        for name in ("c", "d") for i in range(2_000))

    # byte-level determinism of the interleaved stream
    run1, run2 = tmp_path / "m1.jsonl", tmp_path / "m2.jsonl"
    write_jsonl(run1, (e.to_record() for e in mix(spec_eq)))
    write_jsonl(run2, (e.to_record() for e in mix(spec_eq)))
    assert run1.read_bytes() == run2.read_bytes()
    assert time.perf_counter() - t0 < 60.0


def _sample_inputs(sample_corpus_path):
    sentences, temporal, salient = [], [], []
    for sent in iter_corpus_sentences(read_documents(sample_corpus_path, "jsonl")):
        sentences.append(sent)
        spans = parse_temporal(sent.text, sent_id=sent.sent_id)
        temporal.extend(spans)
        merged = resolve_salient_overlaps(
            heuristic_entities(sent.text, sent.sent_id)
            + detect_dates(sent.text, sent_id=sent.sent_id))
        salient.extend(merged)
    return sentences, temporal, salient


def test_stats_equal_quadratic_recount_on_bundled_sample(sample_corpus_path):
    """Streaming stats == brute-force oracle, fraction to full precision."""
    sentences, temporal, salient = _sample_inputs(sample_corpus_path)
    assert len(sentences) >= 10_000
    fast = compute_stats(sentences, temporal, salient)
    slow = brute_force_stats(sentences, temporal, salient)
    assert fast == slow
    report = json.loads(render_report(fast))
    assert report["fraction_entity_sentences_with_temporal"] == \
        slow.fraction_entity_sentences_with_temporal


def test_date_is_most_frequent_type_on_sample(sample_corpus_path):
    """Warning-level: encyclopedic text should be date-dominated."""
    sentences, temporal, salient = _sample_inputs(sample_corpus_path)
    stats = compute_stats(sentences, temporal, salient)
    if most_frequent_type(stats) is not None and \
            most_frequent_type(stats).value != "date":
        warnings.warn(
            "bundled sample is not date-dominated: "
            f"{stats.sentences_with_type} — expected date to lead",
            stacklevel=1)


def test_pipeline_output_is_byte_identical_across_runs(sample_corpus_path,
                                                       tmp_path):
    """Same corpus + seed twice -> identical example files."""
    src = tmp_path / "subset.jsonl"
    with sample_corpus_path.open(encoding="utf-8") as fh:
        head = [next(fh) for _ in range(60)]
    src.write_text("".join(head), encoding="utf-8")

    outs = []
    for name in ("runA", "runB"):
        out = tmp_path / name
        run_pipeline(PipelineConfig(
            input_path=src, out_dir=out, format="jsonl",
            strategies=("tsm", "ssm", "entities"), seed=42))
        outs.append(out)
    for fname in ["examples_tsm.jsonl", "examples_ssm.jsonl",
                  "examples_entities.jsonl", "mixed.jsonl"]:
        assert (outs[0] / fname).read_bytes() == \
            (outs[1] / fname).read_bytes(), fname
