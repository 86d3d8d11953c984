"""Exception hierarchy and warning categories."""


class LyrevalError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(LyrevalError):
    """A document or data file could not be parsed."""


class ValidationError(LyrevalError):
    """Parsed data violates a structural invariant."""


class AlignmentError(ValidationError):
    """Two documents do not share the same line/section shape."""


class DomainError(LyrevalError):
    """An operation was called on input outside its domain."""


class KanjiNotSupportedError(DomainError):
    """Japanese text contains kanji; only kana input is supported."""


class ConfigurationError(LyrevalError):
    """A required provider or setting is missing."""


class ProviderError(LyrevalError):
    """An embedding or translation provider failed."""


class DroppedTextWarning(UserWarning):
    """Characters outside a language's script were dropped from input."""
