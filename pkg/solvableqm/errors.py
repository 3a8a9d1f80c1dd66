"""
Exception hierarchy shared by every solvable-qm component.

Each error knows the process exit code the CLI should use when it escapes
to the top level.
"""

from typing import Any, Optional


class SolvableQMError(Exception):
    """
    Base class for all errors raised by solvable-qm
    """

    exit_code = 2


class UsageError(SolvableQMError):
    """
    A request was malformed, or objects were combined that cannot be.
    """


class DomainError(SolvableQMError):
    """
    A parameter bound or a level range was violated.
    """


class UnsupportedModelError(SolvableQMError):
    """
    The requested operation has no data for the given model.
    """


class InvariantViolation(SolvableQMError):
    """
    An identity that must hold exactly (or within tolerance) failed.
    """

    exit_code = 1

    def __init__(self, name: str, residual: Any = None, detail: str = ""):
        self.name = name
        self.residual = residual
        self.detail = detail

        msg = f"{name} failed"
        if detail:
            msg += f": {detail}"
        if residual is not None:
            msg += f" (residual {residual})"

        super().__init__(msg)


class DegeneracyError(SolvableQMError):
    """
    Seeds were linearly dependent, so their Wronskian vanishes identically.
    """

    exit_code = 1


class PoleError(SolvableQMError):
    """
    A meromorphic expression was evaluated at or too close to a pole.
    """

    exit_code = 1

    def __init__(self, msg: str, distance: Optional[float] = None):
        self.distance = distance
        super().__init__(msg)


class AccuracyError(SolvableQMError):
    """
    A numeric procedure did not reach its tolerance.
    """

    exit_code = 1

    def __init__(self, msg: str, estimate: Optional[float] = None):
        self.estimate = estimate
        super().__init__(msg)
