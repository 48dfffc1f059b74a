"""Shared exception types."""


class IvrfError(Exception):
    """Base class for all library errors."""


class StructuralError(IvrfError):
    """An operation was asked to build a value that cannot exist
    (zero denominator, mismatched parents, broken invariant)."""


class PreconditionError(IvrfError):
    """An argument violates a documented precondition."""


class ResourceError(IvrfError):
    """An exhaustive operation was asked to exceed its stated bounds."""


class UnsupportedCaseError(IvrfError):
    """The requested configuration falls outside the implemented cases."""


class UndecidedError(IvrfError):
    """A boolean query could not be decided within the search budget."""


class ParseError(IvrfError):
    """Malformed element or expression text."""


class ConfigError(IvrfError):
    """Malformed field/domain configuration."""
