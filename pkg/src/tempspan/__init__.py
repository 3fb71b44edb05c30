"""Corpus toolkit for span-corruption pretraining data.

Segments raw corpora into sentences, tags temporal expressions with a
rule grammar, finds salient spans (named entities and regex dates), and
emits masked seq2seq training examples under three strategies: temporal
span masking, salient span masking, and entity-only masking.  A mixture
builder interleaves example files at exact rational proportions, and the
stats module reports span coverage and co-occurrence.
"""

from .errors import (ConfigError, IngestError, MixtureError, RuleError,
                     SpanBoundsError, StatsError, TempspanError)
from .ingest import (MAX_MASKABLE_SENTENCE, Document, IngestCounters,
                     Sentence, iter_corpus_sentences, normalize_text,
                     read_documents, segment_sentences)
from .masking import (SENTINEL, MaskedExample, Strategy, corrupt,
                      make_entities_example, make_ssm_example,
                      make_tsm_examples, sentence_skip_reason)
from .mixture import MixtureComponent, MixtureSpec, load_mixture_spec, mix
from .pipeline import PipelineConfig, process_document, run_pipeline
from .rules import (Rule, RuleSet, TemporalSpan, TemporalType, default_rules,
                    parse_temporal, resolve_overlaps)
from .salient import (SalientKind, SalientSpan, detect_dates,
                      heuristic_entities, load_entity_annotations,
                      resolve_salient_overlaps)
from .stats import CorpusStats, compute_stats, most_frequent_type, render_report

__version__ = "0.1.0"

__all__ = [
    "ConfigError", "IngestError", "MixtureError", "RuleError",
    "SpanBoundsError", "StatsError", "TempspanError",
    "MAX_MASKABLE_SENTENCE", "Document", "IngestCounters", "Sentence",
    "iter_corpus_sentences", "normalize_text", "read_documents",
    "segment_sentences",
    "SENTINEL", "MaskedExample", "Strategy", "corrupt",
    "make_entities_example", "make_ssm_example", "make_tsm_examples",
    "sentence_skip_reason",
    "MixtureComponent", "MixtureSpec", "load_mixture_spec", "mix",
    "PipelineConfig", "process_document", "run_pipeline",
    "Rule", "RuleSet", "TemporalSpan", "TemporalType", "default_rules",
    "parse_temporal", "resolve_overlaps",
    "SalientKind", "SalientSpan", "detect_dates", "heuristic_entities",
    "load_entity_annotations", "resolve_salient_overlaps",
    "CorpusStats", "compute_stats", "most_frequent_type", "render_report",
    "__version__",
]
