from typing import Optional


class ZmError(Exception):
    """Base class for every error raised by zmtool."""


class InvalidParametersError(ZmError, ValueError):
    """The triple (m, n, r) does not present a ZM-group."""

    def __init__(self, condition: str, message: Optional[str] = None):
        self.condition = condition
        super().__init__(message or f"invalid ZM parameters: {condition}")


class InvalidAutomorphismError(ZmError, ValueError):
    """The triple (x1, x2, y) does not describe an automorphism."""

    def __init__(self, condition: str, message: Optional[str] = None):
        self.condition = condition
        super().__init__(message or f"invalid automorphism triple: {condition}")


class PreconditionError(ZmError, ValueError):
    """A closed-form shortcut was called outside its hypothesis (e.g. n not prime)."""


class NoOrderError(ZmError, ArithmeticError):
    """r has no multiplicative order modulo k."""


class CapacityError(ZmError):
    """An enumeration or integer width budget would be exceeded."""


class ConsistencyError(ZmError, AssertionError):
    """An exact division that the theory guarantees did not come out exact."""
