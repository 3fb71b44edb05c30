"""End-to-end run: segment, tag, mask, optionally mix, and report.

One call produces, under the output directory:

    sentences.jsonl           segmented corpus
    temporal.jsonl            typed temporal spans
    salient.jsonl             entity + regex-date spans
    examples_<strategy>.jsonl masked examples per requested strategy
    mixed.jsonl               proportional mixture (when >=2 strategies)
    report.json               corpus statistics
    manifest.json             input hashes, seed, counts, output hashes

Documents are independent after ingestion, so ``jobs > 1`` fans them out
to worker processes; results are merged back in document order and the
per-sentence seeding keeps every byte identical to a serial run.  All
randomness descends from the single configured seed.
"""

from __future__ import annotations

import datetime as _dt
import json
import logging
import multiprocessing
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigError, TempspanError
from .ingest import Document, IngestCounters, read_documents, segment_sentences
from .jsonio import sha256_file, sha256_text, write_jsonl
from .masking import (make_entities_example, make_ssm_example,
                      make_tsm_examples, sentence_skip_reason)
from .mixture import MixtureComponent, MixtureSpec, mix
from .rules import Rule, RuleSet, default_rules, parse_temporal
from .salient import SalientKind, SalientSpan, heuristic_entities
from .stats import CorpusStats, compute_stats, render_report

log = logging.getLogger(__name__)

VALID_STRATEGIES = ("tsm", "ssm", "entities")


@dataclass
class PipelineConfig:
    input_path: Path
    out_dir: Path
    format: str = "jsonl"                # jsonl | plain
    strategies: tuple[str, ...] = ("tsm",)
    seed: int | None = None
    rules_path: Path | None = None       # None -> compiled-in default rules
    entities: str = "heuristic"          # "heuristic" | "none" | a file path
    strict: bool = False
    jobs: int = 1
    mix_outputs: bool = True
    mixture_mode: str = "exact"
    dedup_inputs: bool = False

    def validate(self) -> None:
        """Config checks that must fail before any I/O happens."""
        if not self.strategies:
            raise ConfigError("at least one strategy is required")
        for strategy in self.strategies:
            if strategy not in VALID_STRATEGIES:
                raise ConfigError(
                    f"unknown strategy {strategy!r} "
                    f"(expected one of {', '.join(VALID_STRATEGIES)})")
        if len(set(self.strategies)) != len(self.strategies):
            raise ConfigError("strategies must not repeat")
        if self.format not in ("jsonl", "plain"):
            raise ConfigError(f"unknown corpus format {self.format!r}")
        needs_seed = {"ssm", "entities"} & set(self.strategies)
        if needs_seed and self.seed is None:
            raise ConfigError(
                f"strategy {sorted(needs_seed)[0]!r} requires a seed")
        if self.jobs < 1:
            raise ConfigError("jobs must be >= 1")
        if self.mixture_mode not in ("exact", "exhaust"):
            raise ConfigError(f"unknown mixture mode {self.mixture_mode!r}")

    @property
    def entity_file(self) -> Path | None:
        if self.entities in ("heuristic", "none"):
            return None
        return Path(self.entities)


@dataclass
class _DocResult:
    """Everything one document contributes, in document order."""

    sentences: list[dict] = field(default_factory=list)
    temporal: list[dict] = field(default_factory=list)
    salient: list[dict] = field(default_factory=list)
    examples: dict[str, list[dict]] = field(default_factory=dict)
    stats: CorpusStats = field(default_factory=CorpusStats)
    skipped: dict[str, int] = field(default_factory=dict)


# Per-worker state, set once by _init_worker so documents can be shipped
# to the pool without re-shipping the ruleset and annotations every time.
_W: dict = {}


def _init_worker(rule_defs, config: PipelineConfig, annotations) -> None:
    _W["rules"] = RuleSet([Rule(*d) for d in rule_defs])
    _W["config"] = config
    _W["annotations"] = annotations


def _entity_spans_for(sentence, config: PipelineConfig, annotations,
                      errors: list[str]) -> list[SalientSpan]:
    if config.entities == "none":
        return []
    if config.entities == "heuristic":
        return heuristic_entities(sentence.text, sent_id=sentence.sent_id)
    spans = []
    for start, end in annotations.get(sentence.sent_id, ()):
        if not (0 <= start < end <= len(sentence.text)):
            errors.append(
                f"entity span ({start},{end}) out of bounds for {sentence.sent_id}")
            continue
        spans.append(SalientSpan(
            sent_id=sentence.sent_id, kind=SalientKind.ENTITY,
            start=start, end=end, surface=sentence.text[start:end]))
    return spans


def _process_document(doc: Document) -> _DocResult:
    rules: RuleSet = _W["rules"]
    config: PipelineConfig = _W["config"]
    annotations = _W["annotations"]
    return process_document(doc, rules, config, annotations)


def process_document(doc: Document, rules: RuleSet, config: PipelineConfig,
                     annotations=None) -> _DocResult:
    result = _DocResult()
    sentences = segment_sentences(doc)
    temporal_spans = []
    salient_spans = []
    bounds_errors: list[str] = []
    for sentence in sentences:
        result.sentences.append(sentence.to_record())

    for sentence in sentences:
        t_spans = parse_temporal(sentence.text, rules, sent_id=sentence.sent_id)
        temporal_spans.append(t_spans)
        dates = [
            SalientSpan(sent_id=sentence.sent_id, kind=SalientKind.REGEX_DATE,
                        start=s.start, end=s.end, surface=s.surface)
            for s in t_spans if s.type.value == "date"
        ]
        entities = _entity_spans_for(sentence, config, annotations, bounds_errors)
        salient_spans.append((entities, dates))

    if bounds_errors and config.strict:
        raise TempspanError("[salient] " + bounds_errors[0])
    if bounds_errors:
        result.skipped["entity_span_errors"] = len(bounds_errors)

    for sentence, t_spans, (entities, dates) in zip(sentences, temporal_spans,
                                                    salient_spans):
        result.temporal.extend(s.to_record() for s in t_spans)
        result.salient.extend(s.to_record() for s in entities + dates)

        reason = sentence_skip_reason(sentence.text)
        if reason is not None:
            result.skipped[reason] = result.skipped.get(reason, 0) + 1

        for strategy in config.strategies:
            out = result.examples.setdefault(strategy, [])
            if strategy == "tsm":
                out.extend(e.to_record() for e in make_tsm_examples(sentence, t_spans))
            elif strategy == "ssm":
                example = make_ssm_example(sentence, entities, dates, config.seed or 0)
                if example is not None:
                    out.append(example.to_record())
            else:
                example = make_entities_example(sentence, entities, config.seed or 0)
                if example is not None:
                    out.append(example.to_record())

    flat_temporal = [s for spans in temporal_spans for s in spans]
    flat_salient = [s for pair in salient_spans for group in pair for s in group]
    result.stats = compute_stats(sentences, flat_temporal, flat_salient)
    return result


def _load_raw_annotations(path: Path) -> dict[str, list[tuple[int, int]]]:
    """Annotation records keyed by sent_id; bounds checked later per sentence."""
    if not path.is_file():
        raise TempspanError(f"[salient] cannot read entity annotation file: {path}")
    out: dict[str, list[tuple[int, int]]] = {}
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
                sent_id = rec["sent_id"]
                spans = [(int(s["start"]), int(s["end"])) for s in rec.get("spans", [])]
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise TempspanError(
                    f"[salient] {path}:{lineno}: bad annotation record: {exc!r}"
                ) from exc
            out.setdefault(sent_id, []).extend(spans)
    return out


def run_pipeline(config: PipelineConfig) -> dict:
    """Run every stage; returns the manifest (also written to disk)."""
    config.validate()
    if not Path(config.input_path).is_file():
        raise TempspanError(f"[ingest] cannot read corpus file: {config.input_path}")

    rules = (RuleSet.from_file(config.rules_path)
             if config.rules_path else default_rules())
    annotations = (_load_raw_annotations(config.entity_file)
                   if config.entity_file else None)

    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    counters = IngestCounters()
    documents = read_documents(config.input_path, config.format,
                               strict=config.strict, counters=counters)

    stats = CorpusStats()
    skipped: dict[str, int] = {}
    counts = {"sentences": 0, "temporal_spans": 0, "salient_spans": 0,
              "examples": {s: 0 for s in config.strategies}}

    paths = {
        "sentences": out_dir / "sentences.jsonl",
        "temporal": out_dir / "temporal.jsonl",
        "salient": out_dir / "salient.jsonl",
    }
    for strategy in config.strategies:
        paths[f"examples_{strategy}"] = out_dir / f"examples_{strategy}.jsonl"

    files = {name: path.open("w", encoding="utf-8") for name, path in paths.items()}
    try:
        if config.jobs > 1:
            pool = multiprocessing.Pool(
                processes=config.jobs,
                initializer=_init_worker,
                initargs=(_rule_defs(rules), config, annotations),
            )
            results = pool.imap(_process_document, documents, chunksize=16)
        else:
            pool = None
            results = (process_document(doc, rules, config, annotations)
                       for doc in documents)

        for result in results:
            for rec in result.sentences:
                files["sentences"].write(json.dumps(rec, ensure_ascii=False) + "\n")
            for rec in result.temporal:
                files["temporal"].write(json.dumps(rec, ensure_ascii=False) + "\n")
            for rec in result.salient:
                files["salient"].write(json.dumps(rec, ensure_ascii=False) + "\n")
            for strategy, records in result.examples.items():
                fh = files[f"examples_{strategy}"]
                for rec in records:
                    fh.write(json.dumps(rec, ensure_ascii=False) + "\n")
                counts["examples"][strategy] += len(records)
            counts["sentences"] += len(result.sentences)
            counts["temporal_spans"] += len(result.temporal)
            counts["salient_spans"] += len(result.salient)
            stats = stats.merge(result.stats)
            for reason, n in result.skipped.items():
                skipped[reason] = skipped.get(reason, 0) + n
        if pool is not None:
            pool.close()
            pool.join()
    finally:
        for fh in files.values():
            fh.close()

    report_path = out_dir / "report.json"
    report_path.write_text(render_report(stats) + "\n", encoding="utf-8")

    mixed_path = None
    if config.mix_outputs and len(config.strategies) >= 2:
        emitted = [s for s in config.strategies if counts["examples"][s] > 0]
        if len(emitted) >= 2:
            mixture = MixtureSpec(
                components=tuple(
                    MixtureComponent(name=s, path=paths[f"examples_{s}"])
                    for s in emitted
                ),
                seed=config.seed or 0,
                mode=config.mixture_mode,
                dedup_inputs=config.dedup_inputs,
            )
            mixed_path = out_dir / "mixed.jsonl"
            write_jsonl(mixed_path, (e.to_record() for e in mix(mixture)))

    manifest = {
        "created_at": _dt.datetime.now(_dt.timezone.utc).isoformat(),
        "seed": config.seed,
        "strategies": list(config.strategies),
        "entities_source": ("file" if config.entity_file else config.entities),
        "input": {
            "path": str(config.input_path),
            "format": config.format,
            "sha256": sha256_file(config.input_path),
        },
        "rules": {
            "source": str(config.rules_path) if config.rules_path else "default",
            "sha256": sha256_text(rules.to_json()),
        },
        "counts": {
            "documents": counters.documents,
            "malformed_records_skipped": counters.skipped_records,
            **counts,
        },
        "skipped_sentences": skipped,
        "outputs": {},
    }
    if config.entity_file:
        manifest["input"]["entities_sha256"] = sha256_file(config.entity_file)
    all_outputs = dict(paths)
    all_outputs["report"] = report_path
    if mixed_path is not None:
        all_outputs["mixed"] = mixed_path
    for name, path in all_outputs.items():
        manifest["outputs"][name] = {
            "path": str(path),
            "sha256": sha256_file(path),
        }
    (out_dir / "manifest.json").write_text(
        json.dumps(manifest, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    return manifest


def _rule_defs(rules: RuleSet):
    return [(r.rule_id, r.type, r.priority, r.pattern) for r in rules.rules]
