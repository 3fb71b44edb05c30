"""Exception types shared across the toolkit.

Fatal conditions raise a subclass of TempspanError; recoverable per-record
problems are skipped and counted instead (unless strict mode upgrades them).
"""


class TempspanError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(TempspanError):
    """Invalid configuration, caught before any I/O is attempted."""


class IngestError(TempspanError):
    """Unreadable input or, in strict mode, a malformed corpus record."""


class RuleError(TempspanError):
    """Malformed rule file or rule definition."""


class SpanBoundsError(TempspanError):
    """Span offsets that do not fit the sentence they reference."""


class MixtureError(TempspanError):
    """Unusable mixture specification or component file."""


class StatsError(TempspanError):
    """Span files referencing sentences that do not exist."""
