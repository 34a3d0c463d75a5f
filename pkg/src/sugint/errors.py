"""Exception hierarchy.

The CLI and HTTP service map these onto exit codes / status payloads:
InputError -> exit 1, HypothesisError -> exit 2.  A fuzz run that finds
violations is not an error (exit 3 is derived from the report).
"""


class SugintError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SugintError):
    """Malformed instance, measure, transform, or profile data."""


class HypothesisError(SugintError):
    """An operation was invoked outside its stated preconditions."""


class NotEnumerableError(SugintError):
    """A whole-powerset operation was requested on an interval-mode measure."""


class SearchError(SugintError):
    """A numeric search could not be set up (bad tolerance, missing bounds)."""
