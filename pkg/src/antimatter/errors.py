"""Exception types raised by the kernel.

The CLI maps :class:`VerificationError` to exit status 2 and every other
:class:`AntimatterError` to exit status 1.
"""


class AntimatterError(Exception):
    """Base class for all kernel errors."""


class NonPrimeModulus(AntimatterError, ValueError):
    pass


class ModulusMismatch(AntimatterError, ValueError):
    pass


class NotAUnit(AntimatterError, ValueError):
    pass


class NotNilpotent(AntimatterError, ValueError):
    pass


class ZeroInput(AntimatterError, ValueError):
    pass


class ZeroProduct(AntimatterError, ValueError):
    """Raised when a surviving-monomial witness is requested for a pair with f*g == 0."""


class BothZero(AntimatterError, ValueError):
    pass


class DegreeZero(AntimatterError, ValueError):
    pass


class NotCoprime(AntimatterError, ValueError):
    pass


class ReductionMismatch(AntimatterError, ValueError):
    pass


class NotInSubring(AntimatterError, ValueError):
    pass


class TooLarge(AntimatterError):
    """A finite search space exceeds the configured candidate cap."""


class BudgetExceeded(TooLarge):
    pass


class ZeroOrUnit(AntimatterError, ValueError):
    pass


class NoUnitCoeff(AntimatterError, ValueError):
    pass


class NotInM(AntimatterError, ValueError):
    pass


class NoFreshVariables(AntimatterError):
    pass


class NotACandidate(AntimatterError, ValueError):
    """Units and zero are never candidate atoms."""


class VerificationError(AntimatterError):
    """An internal consistency check failed (e.g. factor product mismatch)."""


class ParseError(AntimatterError, SyntaxError):
    """Syntax error in the expression language, with a source position."""

    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}")

    def pretty(self) -> str:
        caret = " " * self.pos + "^"
        return f"error: {self.message} (position {self.pos})\n  {self.text}\n  {caret}"
