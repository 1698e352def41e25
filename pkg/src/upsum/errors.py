"""Exception types raised by the summarization pipeline."""


class UpsumError(Exception):
    """Base class for all package errors."""


class NoDocumentsError(UpsumError):
    """A cluster directory contained no loadable documents."""


class MalformedTopicError(UpsumError):
    """A topic file is missing its id or narrative."""


class EmptySummaryError(UpsumError):
    """Assembly dropped every sentence (nothing fits the budget)."""


class NoNoiseSourceError(UpsumError):
    """Noise injection needs at least two topics to draw foreign documents."""


class EmptyReferencesError(UpsumError):
    """Recall is undefined when every reference summary is empty."""


class ConfigError(UpsumError):
    """Invalid run configuration (bad value, missing path)."""
