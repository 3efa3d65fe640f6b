"""Exception types shared across the package."""


class CodentError(Exception):
    pass


class ShapeError(CodentError, ValueError):
    """Matrix or vector dimensions do not fit the operation."""


class DomainError(CodentError, ValueError):
    """Argument lies outside the set the operation is defined on."""


class UnsupportedSpec(CodentError, ValueError):
    """Ring parameters would force scalars outside Q(z8)."""


class NotSymmetrizable(CodentError, ValueError):
    pass


class ClosureOverflow(CodentError, RuntimeError):
    pass


class EnumerationOverflow(CodentError, RuntimeError):
    pass


class DimensionOverflow(CodentError, RuntimeError):
    pass


class NotFound(CodentError, KeyError):
    pass


class InternalError(CodentError, RuntimeError):
    """An invariant that must hold by construction was violated."""
