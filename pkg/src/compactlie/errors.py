"""Exception hierarchy shared by every module."""


class LieError(Exception):
    """Base class for all errors raised by compactlie."""


class ParseError(LieError, ValueError):
    """Malformed group name, weight, or tensor expression."""


class DomainError(LieError, ValueError):
    """A precondition on the mathematical input was violated."""


class SingularityError(DomainError):
    """The Weyl denominator vanishes at the requested torus point."""


class ResourceError(LieError):
    """A configured size cap (orbit size, representation dimension) was exceeded."""
