"""Exception hierarchy shared across the package.

Every precondition violation raises :class:`DomainError` (or a subclass) so
that callers, including the CLI, can map "the input is outside the function's
domain" to a single failure mode distinct from usage errors and from
verification failures.
"""

from __future__ import annotations


class ConesineError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ConesineError):
    """Input text could not be parsed into the expected shape.

    Raised for unreadable or malformed cone/config files, unknown fixture
    names, and unparsable literals.  Kept distinct from :class:`DomainError`
    so the CLI can report malformed input as a usage-level failure instead of
    a mathematical-domain one.
    """


class DomainError(ConesineError):
    """The input is structurally valid but outside the mathematical domain.

    Examples: a zero or non-primitive normal where a primitive one is
    required, parallel wedge normals, a parameter ratio on the real axis so
    that some |q| = 1, an evaluation point on a pole, a cone that is not good
    or not Gorenstein where those properties are preconditions.
    """


class BudgetError(ConesineError):
    """A truncated evaluation exceeded its configured term budget."""
