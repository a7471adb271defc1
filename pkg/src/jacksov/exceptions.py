from typing import Any, Optional


class JackSovError(Exception):
    """
    Base class of all errors raised by jacksov.
    """

    pass


class InvalidIndexError(JackSovError, ValueError):
    pass


class PartitionError(JackSovError, ValueError):
    pass


class InvalidCouplingError(JackSovError, ValueError):
    pass


class NonTerminating(JackSovError, ValueError):
    """
    Raised when a hypergeometric series has no non-positive integer upper parameter.
    """

    pass


class DegenerateLowerParameter(JackSovError, ArithmeticError):
    """
    Raised when a denominator Pochhammer symbol vanishes inside a summation range.

    Attributes:
        parameter: the offending lower parameter.
        index: the smallest Pochhammer index at which it vanishes.
        branch: name of the formula that failed (e.g. "f1"), if known.
        hint: remedy to show to the user, if any.
    """

    def __init__(
        self,
        parameter: Any,
        index: int,
        branch: Optional[str] = None,
        hint: Optional[str] = None,
    ):
        self.parameter = parameter
        self.index = index
        self.branch = branch
        self.hint = hint
        super().__init__(self._message())

    def _message(self) -> str:
        msg = f"lower parameter {parameter_str(self.parameter)} vanishes at index {self.index}"
        if self.branch:
            msg = f"[{self.branch}] {msg}"
        if self.hint:
            msg += f"; {self.hint}"
        return msg

    def with_branch(
        self, branch: str, hint: Optional[str] = None
    ) -> "DegenerateLowerParameter":
        return DegenerateLowerParameter(
            self.parameter, self.index, branch=branch, hint=hint or self.hint
        )


class TruncationFailure(JackSovError, ArithmeticError):
    pass


class EigenvalueCollision(JackSovError, ArithmeticError):
    def __init__(self, lam, mu, g):
        self.lam = tuple(lam)
        self.mu = tuple(mu)
        self.g = g
        super().__init__(
            f"E_g{self.lam} == E_g{self.mu} at g={parameter_str(g)}; choose another g"
        )


class NotSymmetricError(JackSovError, ArithmeticError):
    pass


class UnknownSuiteError(JackSovError, KeyError):
    pass


class UnknownFormError(JackSovError, KeyError):
    pass


def parameter_str(value: Any) -> str:
    """Render a rational (or coupling) the way the rest of the package prints it."""
    value = getattr(value, "value", value)
    numerator = getattr(value, "numerator", None)
    denominator = getattr(value, "denominator", None)
    if numerator is None or denominator is None:
        return str(value)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"
