"""Exception types shared across the package."""


class NpdError(Exception):
    """Base class for all errors raised by npd."""


class DegreeMismatch(NpdError, ValueError):
    pass


class SizeMismatch(NpdError, ValueError):
    pass


class SizeGuardExceeded(NpdError, RuntimeError):
    """An enumeration would exceed the configured element budget."""


class InvalidClass(NpdError, IndexError):
    pass


class NonIntegerCount(NpdError, ArithmeticError):
    """A character sum that must be a nonnegative integer was not.

    This always means the character table is inconsistent.
    """


class NonIntegerDegree(NpdError, ArithmeticError):
    pass


class InvalidWindow(NpdError, ValueError):
    pass


class SearchExhausted(NpdError, RuntimeError):
    """An exhaustive factorization search found nothing."""


class NotAHook(NpdError, ValueError):
    pass


class NotACohook(NpdError, ValueError):
    pass


class UnknownSuite(NpdError, KeyError):
    pass
