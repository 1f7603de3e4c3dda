"""Exception hierarchy.

Everything a caller can fix by supplying different inputs derives from
:class:`ValidationError`; the CLI maps those to exit code 2.
"""


class RpsError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(RpsError, ValueError):
    """Inputs violate a documented precondition."""


class DivisionByZero(RpsError, ZeroDivisionError):
    pass


class BothZero(ValidationError):
    pass


class NotInvertible(RpsError, ArithmeticError):
    pass


class TooFewModuli(ValidationError):
    pass


class DegreeZeroModulus(ValidationError):
    def __init__(self, index):
        super().__init__(f"modulus {index} has degree < 1")
        self.index = index


class NotCoprime(ValidationError):
    def __init__(self, i, j):
        super().__init__(f"moduli {i} and {j} are not coprime")
        self.i = i
        self.j = j


class PartialVector(ValidationError):
    """A fully known residue vector was required."""


PartialInput = PartialVector


class UnknownResidue(RpsError, LookupError):
    """Read of a residue whose known-mask bit is clear."""


class BadPlan(ValidationError):
    pass


class EmptyKnownSet(ValidationError):
    pass


class DegreeOverflow(ValidationError):
    pass


class DegreeTooLarge(ValidationError):
    pass


class ConditionViolated(ValidationError):
    """A Barrett parameter condition failed; ``which`` names it."""

    def __init__(self, which, detail=""):
        msg = f"condition violated: {which}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.which = which


class SwapConditionViolated(ConditionViolated):
    pass


class IndexProductMismatch(ValidationError):
    pass


class EvenN(ValidationError):
    pass
