"""Exception hierarchy shared by all modules."""


class KummerError(Exception):
    """Base class for every error raised by this package."""


class BadPrime(KummerError, ValueError):
    """A prime at which the counting formulas do not apply."""

    def __init__(self, p, reason):
        super().__init__(f"p={p} is not a good prime: {reason}")
        self.p = p
        self.reason = reason


class SeriesRangeError(KummerError, IndexError):
    """Coefficient requested outside the known range of a series."""


class SeriesFormError(KummerError, ValueError):
    """Integer-indexed access to a series with a fractional leading exponent."""


class SeriesDivisionError(KummerError, ZeroDivisionError):
    """Division by a series whose leading coefficient is not a unit."""


class EtaParseError(KummerError, ValueError):
    pass


class FieldSizeError(KummerError, MemoryError):
    """Requested table exceeds the configured size guard."""


class NoSingularFibers(KummerError, ValueError):
    pass


class UnsupportedFibration(KummerError, ValueError):
    pass


class InconsistentInput(KummerError, ValueError):
    pass


class TheoremConstraintViolated(KummerError, ValueError):
    pass
