"""Exception types raised by the library.

Errors that describe malformed input subclass ``ValueError`` so callers can
catch them generically; errors that describe a mathematical property failing
(a zero divisor, a non-positive matrix, a non-product state) derive from
:class:`MathematicalFailure`.
"""


class BicomplexError(Exception):
    """Base class for all library errors."""


class InputError(BicomplexError, ValueError):
    """Input is malformed (shapes, dimensions, file contents)."""


class MathematicalFailure(BicomplexError):
    """Input is well formed but lacks a required mathematical property."""


class ShapeMismatch(InputError):
    pass


class NotSquare(InputError):
    pass


class BadFactorization(InputError):
    """A requested size factorization ``n = r * s`` does not exist."""


class ParseError(InputError):
    pass


class ZeroDivisor(MathematicalFailure, ZeroDivisionError):
    """A bicomplex number with a vanishing idempotent component was inverted."""


class Singular(MathematicalFailure):
    def __init__(self, message: str, component: int | None = None):
        super().__init__(message)
        self.component = component


class NotPositive(MathematicalFailure):
    pass


class NotProduct(MathematicalFailure):
    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class ZeroTrace(MathematicalFailure):
    pass


class NotCP(MathematicalFailure):
    pass
