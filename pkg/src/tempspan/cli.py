"""Command-line interface.

Subcommands mirror the pipeline stages (``ingest``, ``parse``, ``mask``,
``mix``, ``stats``) plus the end-to-end ``pipeline``.  File arguments
accept ``-`` for stdin/stdout where streaming makes sense, so stages can
be chained through pipes.  ``TEMPSPAN_RULES`` supplies a default rules
file; without it the compiled-in grammar is used.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from .errors import ConfigError, TempspanError
from .ingest import Sentence, IngestCounters, iter_corpus_sentences, read_documents
from .jsonio import read_jsonl, write_jsonl
from .masking import (make_entities_example, make_ssm_example,
                      make_tsm_examples)
from .mixture import load_mixture_spec, mix
from .pipeline import PipelineConfig, run_pipeline, VALID_STRATEGIES
from .rules import RuleSet, TemporalSpan, default_rules, parse_temporal
from .salient import SalientKind, SalientSpan, detect_dates, heuristic_entities
from .stats import compute_stats, render_report

log = logging.getLogger(__name__)


def _rules_from(args) -> RuleSet:
    path = getattr(args, "rules", None) or os.environ.get("TEMPSPAN_RULES")
    return RuleSet.from_file(path) if path else default_rules()


def _read_sentences(path):
    for rec in read_jsonl(path):
        yield Sentence.from_record(rec)


def cmd_ingest(args) -> int:
    counters = IngestCounters()
    docs = read_documents(args.infile, args.format, strict=args.strict,
                          counters=counters)
    count = write_jsonl(args.out, (s.to_record() for s in iter_corpus_sentences(docs)))
    log.info("ingest: %d documents, %d sentences, %d records skipped",
             counters.documents, count, counters.skipped_records)
    return 0


def cmd_parse(args) -> int:
    rules = _rules_from(args)

    def spans():
        for sentence in _read_sentences(args.infile):
            for span in parse_temporal(sentence.text, rules, sent_id=sentence.sent_id):
                yield span.to_record()

    write_jsonl(args.out, spans())
    return 0


def _entity_lookup(args, rules):
    """Returns sent_id -> entity spans callable for the mask command."""
    source = args.entities
    if source == "none":
        return lambda sentence: []
    if source == "heuristic":
        return lambda sentence: heuristic_entities(sentence.text, sentence.sent_id)
    annotations = {}
    for rec in read_jsonl(source):
        annotations.setdefault(rec["sent_id"], []).extend(
            (int(s["start"]), int(s["end"])) for s in rec.get("spans", []))

    def from_file(sentence):
        spans = []
        for start, end in annotations.get(sentence.sent_id, ()):
            if 0 <= start < end <= len(sentence.text):
                spans.append(SalientSpan(
                    sent_id=sentence.sent_id, kind=SalientKind.ENTITY,
                    start=start, end=end, surface=sentence.text[start:end]))
        return spans

    return from_file


def cmd_mask(args) -> int:
    if args.strategy in ("ssm", "entities") and args.seed is None:
        raise ConfigError(f"strategy {args.strategy!r} requires a seed")
    rules = _rules_from(args)
    entity_spans = _entity_lookup(args, rules)
    seed = args.seed if args.seed is not None else 0

    def examples():
        for sentence in _read_sentences(args.infile):
            if args.strategy == "tsm":
                spans = parse_temporal(sentence.text, rules, sent_id=sentence.sent_id)
                for example in make_tsm_examples(sentence, spans):
                    yield example.to_record()
            elif args.strategy == "ssm":
                dates = detect_dates(sentence.text, rules, sent_id=sentence.sent_id)
                example = make_ssm_example(sentence, entity_spans(sentence),
                                           dates, seed)
                if example is not None:
                    yield example.to_record()
            else:
                example = make_entities_example(sentence, entity_spans(sentence), seed)
                if example is not None:
                    yield example.to_record()

    write_jsonl(args.out, examples())
    return 0


def cmd_mix(args) -> int:
    spec = load_mixture_spec(args.spec)
    write_jsonl(args.out, (e.to_record() for e in mix(spec)))
    return 0


def cmd_stats(args) -> int:
    sentences = list(_read_sentences(args.sents))
    temporal = [TemporalSpan.from_record(r) for r in read_jsonl(args.temporal)]
    salient = [SalientSpan.from_record(r) for r in read_jsonl(args.salient)]
    stats = compute_stats(sentences, temporal, salient)
    report = render_report(stats)
    if str(args.out) == "-":
        sys.stdout.write(report + "\n")
    else:
        Path(args.out).write_text(report + "\n", encoding="utf-8")
    if args.table:
        sys.stdout.write(render_report(stats, table=True) + "\n")
    return 0


def cmd_pipeline(args) -> int:
    config = PipelineConfig(
        input_path=Path(args.infile),
        out_dir=Path(args.out_dir),
        format=args.format,
        strategies=tuple(s.strip() for s in args.strategies.split(",") if s.strip()),
        seed=args.seed,
        rules_path=Path(args.rules) if args.rules else (
            Path(os.environ["TEMPSPAN_RULES"]) if os.environ.get("TEMPSPAN_RULES") else None),
        entities=args.entities,
        strict=args.strict,
        jobs=args.jobs,
        mix_outputs=not args.no_mix,
        mixture_mode=args.mixture_mode,
        dedup_inputs=args.dedup_inputs,
    )
    config.validate()
    manifest = run_pipeline(config)
    log.info("pipeline: wrote %d outputs to %s",
             len(manifest["outputs"]), args.out_dir)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tempspan",
        description="Temporal and salient span masking data toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="read a corpus and emit sentences jsonl")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--format", choices=("jsonl", "plain"), default="jsonl")
    p.add_argument("--out", required=True)
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("parse", help="tag temporal spans in a sentences file")
    p.add_argument("--rules", default=None)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("mask", help="emit masked training examples")
    p.add_argument("--strategy", choices=VALID_STRATEGIES, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--entities", default="heuristic",
                   help="'heuristic', 'none', or an entity annotation jsonl file")
    p.add_argument("--rules", default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_mask)

    p = sub.add_parser("mix", help="interleave example files proportionally")
    p.add_argument("--spec", required=True, help="mixture spec (toml or json)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_mix)

    p = sub.add_parser("stats", help="span statistics for a segmented corpus")
    p.add_argument("--sents", required=True)
    p.add_argument("--temporal", required=True)
    p.add_argument("--salient", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--table", action="store_true",
                   help="also print a human-readable table")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("pipeline", help="run every stage end to end")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--format", choices=("jsonl", "plain"), default="jsonl")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--strategies", default="tsm",
                   help="comma-separated subset of tsm,ssm,entities")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--entities", default="heuristic")
    p.add_argument("--rules", default=None)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-mix", action="store_true",
                   help="skip the mixed.jsonl output")
    p.add_argument("--mixture-mode", choices=("exact", "exhaust"), default="exact")
    p.add_argument("--dedup-inputs", action="store_true")
    p.set_defaults(func=cmd_pipeline)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except TempspanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
