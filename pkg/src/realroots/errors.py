"""Exception hierarchy.

Everything raised on purpose by this package derives from :class:`RealRootsError`.
Input problems (bad syntax, unknown names) derive from :class:`InputError`; the
rest are mathematical domain errors.
"""


class RealRootsError(Exception):
    pass


class DomainError(RealRootsError, ValueError):
    pass


class InputError(RealRootsError, ValueError):
    pass


class ZeroPolynomial(DomainError):
    pass


class DivisionByZeroPoly(DomainError, ZeroDivisionError):
    pass


class BothZero(DomainError):
    pass


class ConstantPolynomial(DomainError):
    pass


class BadInterval(DomainError):
    pass


class DegenerateSequence(DomainError):
    pass


class AllZeroGenerators(DomainError):
    pass


class NotZeroDimensional(DomainError):
    pass


class SearchExhausted(DomainError):
    pass


class PolySyntaxError(InputError):
    """Malformed polynomial expression; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message, pos=None, src=None):
        self.pos = pos
        self.src = src
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class UnknownVariable(InputError):
    def __init__(self, name, allowed):
        self.name = name
        self.allowed = tuple(allowed)
        super().__init__(f"unknown variable {name!r} (expected one of {', '.join(self.allowed)})")
