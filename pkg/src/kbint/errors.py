"""Exception hierarchy shared by every module in the package."""


class KBintError(Exception):
    """Base class for all errors raised by kbint."""


class DomainError(KBintError, ValueError):
    """An argument lies outside the domain of the function."""


class PoleError(DomainError):
    """A gamma-function argument hit a pole (zero or a negative integer)."""


class GammaOverflowError(KBintError, OverflowError):
    """The result is finite mathematically but not representable as a float."""


class HypothesisError(DomainError):
    """An identity case violates one of the theorem hypotheses.

    ``hypothesis`` holds the violated condition in readable form,
    e.g. ``"lambda + v/k > 0"``.
    """

    def __init__(self, hypothesis, message=None):
        self.hypothesis = hypothesis
        super().__init__(message or f"hypothesis violated: {hypothesis}")


class ConvergenceError(KBintError, ArithmeticError):
    """A series did not meet its stopping rule within ``max_terms``."""

    def __init__(self, message, partial_sum=float("nan"), terms=0):
        self.partial_sum = partial_sum
        self.terms = terms
        super().__init__(message)


class DivergenceError(KBintError, ArithmeticError):
    """The requested series diverges at the given argument."""


class ToleranceNotMetError(KBintError, ArithmeticError):
    """Quadrature exhausted its levels before reaching the tolerance.

    The best available value and its error estimate are attached.
    """

    def __init__(self, message, value, abs_error_estimate, evaluations):
        self.value = value
        self.abs_error_estimate = abs_error_estimate
        self.evaluations = evaluations
        super().__init__(message)


class NonFiniteError(KBintError, ArithmeticError):
    """The integrand returned NaN or infinity inside the open interval."""
