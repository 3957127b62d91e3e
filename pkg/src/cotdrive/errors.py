"""Package-wide exception types."""


class CotDriveError(Exception):
    """Base class for all package errors."""


class SchemaError(CotDriveError):
    """Input file does not match the declared schema (e.g. missing column)."""


class IntegrityError(CotDriveError):
    """Input data violates an invariant (duplicate or non-monotone frames)."""


class ConfigError(CotDriveError):
    """Invalid configuration value or missing configuration resource."""


class CorpusError(CotDriveError):
    """Annotation corpus file is corrupt or unreadable."""


class SessionError(CotDriveError):
    """A teacher dialogue session failed; carries the partial transcript."""

    def __init__(self, message: str, partial_turns=()):
        super().__init__(message)
        self.partial_turns = tuple(partial_turns)


class SampleRejectedError(CotDriveError):
    """A training sample cannot be used (e.g. answer longer than the window)."""

    def __init__(self, message: str, sample_id=None):
        super().__init__(message)
        self.sample_id = sample_id


class ScoringError(CotDriveError):
    """Text scoring is undefined for the given inputs (e.g. empty token set)."""


class UndefinedMetricError(CotDriveError):
    """A metric is undefined for the given data (e.g. empty class bucket)."""
