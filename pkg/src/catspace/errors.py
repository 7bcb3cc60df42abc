"""Exception types raised across the package."""


class CatspaceError(Exception):
    """Base class for all errors raised by catspace."""


class IngestionError(CatspaceError):
    """Input text could not be parsed into a dataset."""


class ConfigurationError(CatspaceError, ValueError):
    """An option or parameter is out of its valid range."""


class DimensionError(CatspaceError, ValueError):
    """Array arguments have incompatible shapes."""


class DomainError(CatspaceError, ValueError):
    """A value lies outside the domain of the requested operation."""


class EvaluationError(CatspaceError):
    """Scoring was requested on data that cannot be scored."""
