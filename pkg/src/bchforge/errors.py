"""Exception types shared across the package."""


class BchForgeError(Exception):
    """Base class for every error raised by this package."""


class NotPrime(BchForgeError):
    def __init__(self, p):
        super().__init__(f"{p} is not prime")
        self.p = p


class DegreeZero(BchForgeError):
    pass


class NotPrimePower(BchForgeError):
    def __init__(self, q):
        super().__init__(f"{q} is not a prime power")
        self.q = q


class FieldMismatch(BchForgeError):
    pass


class DivisionByZero(BchForgeError, ZeroDivisionError):
    pass


class NotDivisor(BchForgeError):
    def __init__(self, l, order):
        super().__init__(f"{l} does not divide the unit group order {order}")
        self.l = l


class OrderMismatch(BchForgeError):
    pass


class BothZero(BchForgeError):
    pass


class ZeroConstantTerm(BchForgeError):
    pass


class CoefficientNotInBaseField(BchForgeError):
    pass


class NotCoprime(BchForgeError):
    def __init__(self, n, q):
        super().__init__(f"gcd({n}, {q}) != 1")
        self.n = n
        self.q = q


class LengthMismatch(BchForgeError):
    pass


class UnsupportedDelta(BchForgeError):
    def __init__(self, delta):
        super().__init__(f"syndrome fast path needs designed distance 3, got {delta}")
        self.delta = delta


class BudgetExceeded(BchForgeError):
    def __init__(self, method, w, size, budget):
        super().__init__(
            f"{method} at weight {w} needs {size} units, budget is {budget}"
        )
        self.method = method
        self.w = w
        self.size = size
        self.budget = budget


class CapExceeded(BchForgeError):
    def __init__(self, size, cap):
        super().__init__(f"unit group of size {size} exceeds the search cap {cap}")
        self.size = size
        self.cap = cap


class RegimeMismatch(BchForgeError):
    pass


class NotInvertible(BchForgeError):
    pass


class GcdViolation(BchForgeError):
    pass


class InvalidParams(BchForgeError):
    pass


class EqualArguments(BchForgeError):
    pass


class TheoremInconsistency(BchForgeError):
    """Two applicable predictions exclude each other; this is a build-failing state."""


class CorruptRecord(BchForgeError):
    def __init__(self, lineno, reason):
        super().__init__(f"catalog line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason
