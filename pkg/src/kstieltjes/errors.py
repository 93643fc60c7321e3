"""Exception types shared across the library.

The command line front end maps these onto its exit-code contract, so new
error conditions should reuse one of the classes below instead of raising
bare built-ins.
"""


class DomainError(ValueError):
    """A point, interval or set lies outside the domain of a function."""


class DimensionMismatchError(ValueError):
    """Operands have incompatible dimensions, kinds or domains."""


class GaugeTooSmallError(RuntimeError):
    """Bisection could not produce a fine division within the depth cap.

    Signals a pathological gauge evaluator (for example one that shrinks
    faster near a point than bisection can reach), not a mathematical
    failure: a fine division always exists for a positive gauge.
    """


class OracleFailureError(RuntimeError):
    """The refinement oracle did not stabilise within its level budget."""


class HypothesisViolationError(ValueError):
    """A convergence experiment was asked to run with a false hypothesis."""


class FunctionSpecError(ValueError):
    """A function specification file is malformed or inconsistent."""


class SetExpressionError(ValueError):
    """An elementary-set expression does not parse.

    Carries the character position at which parsing failed.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"position {position}: {message}")
        self.position = position
