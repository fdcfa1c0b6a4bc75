"""Exception hierarchy shared by all modules."""


class EigenfactorError(Exception):
    """Base class for every error raised by this package."""


# numberfield
class NotMonic(EigenfactorError, ValueError):
    pass


class Reducible(EigenfactorError, ValueError):
    pass


class NoNearbyRoot(EigenfactorError, ValueError):
    pass


class FieldMismatch(EigenfactorError, TypeError):
    pass


class DivisionByZero(EigenfactorError, ZeroDivisionError):
    pass


class ParseError(EigenfactorError, ValueError):
    pass


# qseries
class TruncationMismatch(EigenfactorError, ValueError):
    pass


class GuardExceeded(EigenfactorError, ValueError):
    pass


# forms
class UnknownPrimeFactor(EigenfactorError, ValueError):
    def __init__(self, n, factor):
        super().__init__(
            f"{n} has a prime factor outside the coefficient table "
            f"(cofactor {factor}); the recurrence oracle only knows tabulated primes"
        )
        self.n = n
        self.cofactor = factor


class OutOfRange(EigenfactorError, IndexError):
    pass


class InvariantViolation(EigenfactorError, ValueError):
    def __init__(self, check, detail=""):
        super().__init__(f"{check}: {detail}" if detail else check)
        self.check = check
