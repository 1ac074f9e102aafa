"""Exception types shared across the package."""


class ScrollRegError(Exception):
    """Base class for all errors raised by scrollreg."""


class PolynomialSyntaxError(ScrollRegError, ValueError):
    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class UnknownVariableError(ScrollRegError, KeyError):
    def __init__(self, name):
        self.name = name
        super().__init__(name)

    def __str__(self):
        return f"unknown variable {self.name!r}"


class RingMismatchError(ScrollRegError, ValueError):
    pass


class NotHomogeneousError(ScrollRegError, ValueError):
    pass


class DegenerateInputError(ScrollRegError, ValueError):
    """The geometric input violates a hypothesis (torsion, trivial summand, ...)."""


class LineContainedError(ScrollRegError):
    """The line lies inside the scheme, so the secant scheme is not finite."""


class CertificationError(ScrollRegError):
    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__("; ".join(self.failures))


class BudgetExceeded(ScrollRegError):
    pass


class NotMinimalError(ScrollRegError, ValueError):
    """A resolution was expected to be minimal but has a unit entry."""
