"""Exception hierarchy shared across the package.

Two top-level families matter for callers: DomainError covers rejected
input or rule violations (CLI exit 2, HTTP 4xx), InternalInvariantError
covers "this should be impossible" breaches (CLI exit 3, HTTP 500).
"""


class JuniperGreenError(Exception):
    """Base class for all package errors."""


class DomainError(JuniperGreenError):
    """Invalid input or a rule violation by the caller."""


class InternalInvariantError(JuniperGreenError):
    """A guaranteed internal invariant failed; signals a bug, not bad input."""
